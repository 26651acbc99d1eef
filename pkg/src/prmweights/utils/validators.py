from typing import Iterable


def render_report(results: Iterable) -> str:
    """
    Markdown summary of finished verification suites.
    Failing suites list their first counterexamples.
    """
    results = list(results)
    report = ["# ✅ Verification Report" if all(r.passed for r in results) else "# ❌ Verification Report"]

    if not results:
        report.append("- ⚠️ No suites were run.")
        return "\n".join(report)

    for r in results:
        mark = "✅" if r.passed else "❌"
        report.append(f"- {mark} `{r.name}`: {r.checked} checks")
        for failure in r.failures:
            report.append(f"    - {failure}")

    failed = [r.name for r in results if not r.passed]
    if failed:
        report.append(f"\n**{len(failed)} suite(s) failed:** {', '.join(failed)}")
    else:
        report.append("\n- ✅ All suites pass.")
    return "\n".join(report)
