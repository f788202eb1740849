"""FastAPI application exposing the approximant toolkit.

Error convention: library exceptions map to a JSON body
{"error": {"kind": <exception class>, "message": <str>}} with status 400
for parameter/domain problems, 409 for strict-mode conditioning
rejections, and 500 for internal numerical failures.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import bench, pade, pfd
from ..errors import (
    IllConditioned,
    InvalidSpec,
    InverseDomainError,
    MlpadeError,
    MultiplePositiveRoots,
    NegativeDiscriminant,
    NoPositiveRoot,
)
from ..inverse import invert_fourth, invert_r32
from ..matml import mlf_action, mlf_matrix
from ..oracle import mlf_oracle
from .schemas import (
    BenchRequest,
    CoeffsRequest,
    EvalRequest,
    InvertRequest,
    MatrixRequest,
    OracleRequest,
    PfdRequest,
    TableRequest,
)

SCHEMA = "ml-pade/1"

_DOMAIN_ERRORS = (
    InvalidSpec,
    InverseDomainError,
    NegativeDiscriminant,
    NoPositiveRoot,
    MultiplePositiveRoots,
)


def create_app() -> FastAPI:
    app = FastAPI(title="mlpade", version="1")

    @app.exception_handler(MlpadeError)
    async def _mlpade_error(request: Request, exc: MlpadeError):
        if isinstance(exc, IllConditioned):
            status = 409
        elif isinstance(exc, _DOMAIN_ERRORS):
            status = 400
        else:
            status = 500
        return _error_response(status, exc)

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return _error_response(400, exc)

    @app.get("/v1/health")
    def health():
        return {"schema": SCHEMA, "status": "ok"}

    @app.post("/v1/coeffs")
    def coeffs(req: CoeffsRequest):
        spec = pade.make_spec(req.alpha, req.beta, req.m, req.n)
        approx = pade.construct(spec, strict=req.strict)
        doc = pade.to_json_dict(approx)
        warnings = []
        note = pade.construction_note(spec)
        if note:
            warnings.append(note)
        if approx.cond_estimate < pade.RCOND_WARN:
            warnings.append(
                f"coefficient system ill-conditioned (rcond ~ {approx.cond_estimate:.2e})"
            )
        doc["warnings"] = warnings
        return doc

    @app.post("/v1/eval")
    def eval_approx(req: EvalRequest):
        approx = pade.construct(pade.make_spec(req.alpha, req.beta, req.m, req.n))
        xs = [req.x] if req.xs is None else req.xs
        values = [pade.eval_scalar(approx, x) for x in xs]
        out = {"schema": SCHEMA, "x": xs, "values": values}
        if req.x is not None:
            out["value"] = values[0]
        return out

    @app.post("/v1/oracle")
    def oracle(req: OracleRequest):
        xs = [req.x] if req.xs is None else req.xs
        values = [mlf_oracle(req.alpha, req.beta, x) for x in xs]
        out = {"schema": SCHEMA, "x": xs, "values": values}
        if req.x is not None:
            out["value"] = values[0]
        return out

    @app.post("/v1/invert")
    def invert(req: InvertRequest):
        approx = pade.construct(pade.make_spec(req.alpha, req.beta, req.m, req.n))
        if (req.m, req.n) == (3, 2):
            value = invert_r32(approx, req.y)
        else:
            value = invert_fourth(approx, req.y)
        return {"schema": SCHEMA, "y": req.y, "value": value}

    @app.post("/v1/pfd")
    def partial_fractions(req: PfdRequest):
        approx = pade.construct(pade.make_spec(req.alpha, req.beta, req.m, req.n))
        return pfd.to_json_dict(pfd.decompose(approx))

    @app.post("/v1/matrix")
    def matrix(req: MatrixRequest):
        approx = pade.construct(pade.make_spec(req.alpha, req.beta, req.m, req.n))
        form = pfd.decompose(approx)
        n = len(req.matrix)
        if req.rhs is None and req.unit_rhs_index is None:
            result = mlf_matrix(req.matrix, form)
            return {"schema": SCHEMA, "mode": "full", "result": result}
        rhs = req.rhs
        if rhs is None:
            rhs = [0.0] * n
            rhs[req.unit_rhs_index - 1] = 1.0
        result = mlf_action(req.matrix, rhs, form)
        return {"schema": SCHEMA, "mode": "action", "result_vector": result}

    @app.post("/v1/table")
    def table(req: TableRequest):
        return build_table(req.which, req.grid_step, req.timing)

    @app.post("/v1/bench")
    def run_bench(req: BenchRequest):
        return build_bench(req)

    return app


def _error_response(status, exc):
    return JSONResponse(
        status_code=status,
        content={
            "schema": SCHEMA,
            "error": {"kind": type(exc).__name__, "message": str(exc)},
        },
    )


def build_table(which, grid_step, timing=True):
    if which == "error":
        if 10.0 / grid_step < 10:
            raise ValueError(
                f"grid step {grid_step} leaves fewer than 10 points on [0, 10]"
            )
        tab = bench.error_table(grid_step=grid_step)
        out = {"schema": SCHEMA, "which": "error", "grid_step": grid_step,
               "rows": tab["rows"]}
        if timing:
            out["runtime_seconds"] = tab["runtime_seconds"]
        return out

    rows = []
    if which == "rde":
        for alpha in (0.5, 0.9):
            rep = bench.run_reaction_diffusion(alpha, dt=grid_step)
            rows.append(_table_row({"alpha": alpha}, rep, timing))
    elif which == "vie":
        for alpha, beta in ((0.6, 0.6), (1.0, 1.5)):
            rep = bench.run_vie(alpha, beta, dt=grid_step)
            rows.append(_table_row({"alpha": alpha, "beta": beta}, rep, timing))
    elif which == "bt":
        rep = bench.run_bagley_torvik(dt=grid_step)
        rows.append(_table_row({"a1": 3.0, "a2": 1.0}, rep, timing))
    elif which == "basset":
        rep = bench.run_basset(dt=grid_step)
        rows.append(_table_row({"delta": 3.0 / 7.0}, rep, timing))
    return {"schema": SCHEMA, "which": which, "grid_step": grid_step, "rows": rows}


def _table_row(params, rep, timing):
    row = dict(params)
    row["max_ae"] = rep.max_ae
    row["max_re"] = rep.max_re
    if timing:
        row["runtime_seconds"] = rep.runtime_seconds
    return row


def build_bench(req: BenchRequest):
    mn = (req.m, req.n)
    kw = {}
    if req.t_max is not None:
        kw["t_max"] = req.t_max
    if req.dt is not None:
        kw["dt"] = req.dt

    if req.case == "rde":
        params = {"alpha": req.alpha if req.alpha is not None else 0.5,
                  "x_loc": req.x_loc if req.x_loc is not None else 0.5}
        rep = bench.run_reaction_diffusion(params["alpha"], params["x_loc"],
                                           mn=mn, **kw)
    elif req.case == "vie":
        params = {"alpha": req.alpha if req.alpha is not None else 0.6,
                  "beta": req.beta if req.beta is not None else 0.6}
        rep = bench.run_vie(params["alpha"], params["beta"], mn=mn, **kw)
    elif req.case == "ultraslow":
        params = {"alpha": req.alpha if req.alpha is not None else 0.6,
                  "k_alpha": req.k_alpha if req.k_alpha is not None else 1.0,
                  "x_loc": req.x_loc if req.x_loc is not None else 1.0}
        rep = bench.run_ultraslow(params["alpha"], params["k_alpha"],
                                  params["x_loc"], mn=mn, **kw)
    elif req.case == "bt":
        params = {"a1": req.a1 if req.a1 is not None else 3.0,
                  "a2": req.a2 if req.a2 is not None else 1.0}
        rep = bench.run_bagley_torvik(params["a1"], params["a2"], mn=mn, **kw)
    else:
        params = {"delta": req.delta if req.delta is not None else 3.0 / 7.0}
        rep = bench.run_basset(params["delta"], mn=mn, **kw)

    from ..report import report_summary

    out = report_summary(rep, req.case, params, with_timing=req.timing)
    if req.include_points:
        out["points"] = {
            "t": rep.grid,
            "approx": rep.approx,
            "exact": rep.exact,
            "abs_err": rep.abs_err,
            "rel_err": rep.rel_err,
        }
    return out


app = create_app()
