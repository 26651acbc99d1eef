from langgraph.graph import StateGraph, END, START

from src.prmweights.nodes.verify_nodes import next_step, plan_suites, run_current_suite, summarize
from src.prmweights.state.state import VerificationState


def graph_builder():
    """
    Builds and returns the compiled verification graph.
    plan -> run -> plan ... until the queue is empty, then summary.
    """
    graph = StateGraph(VerificationState)

    # === Define nodes ===
    graph.add_node("plan", plan_suites)
    graph.add_node("run", run_current_suite)
    graph.add_node("summary", summarize)

    # === Define edges ===
    graph.add_edge(START, "plan")
    graph.add_conditional_edges("plan", next_step, {
        "run": "run",
        "summary": "summary",
    })
    graph.add_edge("run", "plan")
    graph.add_edge("summary", END)

    return graph.compile()


# === Compiled graph ready for use ===
verification_graph = graph_builder()


def run_verification(state: VerificationState) -> VerificationState:
    """Runs the graph to completion and returns the final state."""
    result = verification_graph.invoke(state.model_dump(), config={"recursion_limit": 100})
    return VerificationState(**result) if isinstance(result, dict) else result
