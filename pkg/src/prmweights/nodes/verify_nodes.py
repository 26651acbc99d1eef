from src.prmweights.nodes.suites import SUITES, run_suite
from src.prmweights.state.state import VerificationState
from src.prmweights.utils.errors import DomainError
from src.prmweights.utils.validators import render_report

# =============================================================================
#               1. Agent : Plan
# =============================================================================

def expand_suites(names) -> list:
    """'all' expands to every suite, in registry order."""
    out = []
    for name in names:
        if name == "all":
            out.extend(s for s in SUITES if s not in out)
        elif name in SUITES:
            if name not in out:
                out.append(name)
        else:
            raise DomainError(f"unknown suite '{name}'; choose from {', '.join(SUITES)} or 'all'")
    return out


def plan_suites(state: VerificationState) -> VerificationState:
    """
    Pops the next suite off the queue; the first visit fills the queue.
    """
    if state.current is None and not state.results and not state.pending:
        state.pending = expand_suites(state.suites)
    state.current = state.pending.pop(0) if state.pending else None
    return state


def next_step(state: VerificationState) -> str:
    return "run" if state.current else "summary"

# =============================================================================
#               2. Agent : Run one suite
# =============================================================================

def run_current_suite(state: VerificationState) -> VerificationState:
    state.results.append(run_suite(state.current, state))
    return state

# =============================================================================
#               3. Agent : Summary
# =============================================================================

def summarize(state: VerificationState) -> VerificationState:
    state.passed = all(r.passed for r in state.results)
    state.report = render_report(state.results)
    return state
