"""Per-grid-point comparison reports backing every table in the package."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class EvalReport:
    grid: list
    approx: list
    exact: list
    abs_err: list = field(repr=False)
    rel_err: list = field(repr=False)
    max_ae: float = 0.0
    max_re: float = 0.0
    runtime_seconds: float = 0.0


def make_report(grid, approx, exact, runtime_seconds=0.0) -> EvalReport:
    """Assemble a report; relative error only where the reference is non-tiny."""
    abs_err = [abs(a - e) for a, e in zip(approx, exact)]
    rel_err = [
        ae / abs(e) if abs(e) > 1e-300 else 0.0
        for ae, e in zip(abs_err, exact)
    ]
    return EvalReport(
        grid=list(grid),
        approx=list(approx),
        exact=list(exact),
        abs_err=abs_err,
        rel_err=rel_err,
        max_ae=max(abs_err, default=0.0),
        max_re=max(rel_err, default=0.0),
        runtime_seconds=runtime_seconds,
    )


def fmt(v: float) -> str:
    """17 significant digits: round-trippable and byte-stable."""
    return f"{v:.17g}"


def report_csv(r: EvalReport) -> str:
    lines = ["t,approx,exact,abs_err,rel_err"]
    for i in range(len(r.grid)):
        lines.append(
            f"{fmt(r.grid[i])},{fmt(r.approx[i])},{fmt(r.exact[i])},"
            f"{fmt(r.abs_err[i])},{fmt(r.rel_err[i])}"
        )
    return "\n".join(lines) + "\n"


def report_summary(r: EvalReport, case: str, params: dict, with_timing=True) -> dict:
    out = {
        "schema": "ml-pade/1",
        "case": case,
        "params": params,
        "max_ae": r.max_ae,
        "max_re": r.max_re,
    }
    if with_timing:
        out["runtime_seconds"] = r.runtime_seconds
    return out
