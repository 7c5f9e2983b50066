"""Command-line front end.

Subcommands
-----------
compute
    Spectral norms, witnesses, root diagnostics, census, and entanglement
    measures for one state (or a .jsonl batch).
reproduce
    Recompute a frozen reference table (appendixA, tables2to4, table1) and
    print computed-vs-reference deviations; exits nonzero on any violation.
oracle
    Independent alternating-maximization lower bound for one state.
census
    Count of anti-eigenpairs with positive anti-eigenvalue.

States are given either as ``--coeffs <path-or-inline-JSON>`` (object
``{"d": int, "s": [[re, im], ...]}``, bare pair array, or a pure-real
shorthand array) or as ``--dicke <d> <j1,j2>``.  Reports are JSON on stdout
with numbers at 17 significant digits; ``--format table`` prints an aligned
text layout instead.  ``SPECNORM_THREADS`` caps batch parallelism.

Exit codes: 0 success, 1 reproduction out of tolerance, 2 bad input,
3 computation failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__, golden
from .engine import (
    EXCEPTIONAL_REL,
    anti_eigen_census,
    build_pq,
    build_uv,
    candidate_roots,
    exceptionality,
    fixed_point_polynomial,
    spectral_norm,
)
from .errors import (
    ComputationError,
    ExceptionalFamily,
    InputError,
    UnknownTarget,
    WrongLength,
    ZeroState,
)
from .exceptional import (
    detect_exceptional,
    perturbed_two_root_state,
    two_root_reference_state,
)
from .measures import standard_basis_state
from .oracle import OracleConfig, oracle_max
from .states import QubitState, hs_norm, make_state, normalize

UNIT_TOL = 1e-4  # |hs - 1| below this reports eta / eta_rel


# -- JSON emission ---------------------------------------------------------------

def _jnum(x: float) -> str:
    f = float(x)
    if not math.isfinite(f):
        raise ComputationError(f"non-finite value in report: {f!r}")
    if f == 0.0:
        f = 0.0  # drop the sign of negative zero
    return format(f, ".17g")


def _emit(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_jnum(obj))
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _emit(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    else:
        raise ComputationError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Serialize a report with floats at 17 significant digits."""
    out: list = []
    _emit(obj, out)
    return "".join(out)


def _pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


# -- input parsing ---------------------------------------------------------------

def _entry(e) -> complex:
    if isinstance(e, bool):
        raise InputError(f"bad coefficient entry {e!r}")
    if isinstance(e, (int, float)):
        return complex(e)
    if (isinstance(e, (list, tuple)) and len(e) == 2
            and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in e)):
        return complex(e[0], e[1])
    raise InputError(f"bad coefficient entry {e!r}: expected number or [re, im]")


def state_from_json(doc, d_flag: int | None = None) -> QubitState:
    """Build a state from a parsed input document.

    Accepts ``{"d": int, "s": [entries]}``, a bare array of ``[re, im]``
    pairs, or a pure-real array of numbers; entry kinds may be mixed.
    """
    if isinstance(doc, dict):
        if "s" not in doc:
            raise InputError('input object needs an "s" array')
        entries = [_entry(e) for e in doc["s"]]
        d = doc.get("d", len(entries) - 1)
        if not isinstance(d, int) or isinstance(d, bool):
            raise InputError(f'bad "d" value {d!r}')
    elif isinstance(doc, list):
        entries = [_entry(e) for e in doc]
        d = len(entries) - 1
    else:
        raise InputError(f"cannot read a state from {type(doc).__name__} input")
    if d_flag is not None and d_flag != d:
        raise WrongLength(f"--d {d_flag} does not match input with d={d}")
    return make_state(d, entries)


def _load_doc(text_or_path: str):
    s = text_or_path.strip()
    if s.startswith("[") or s.startswith("{"):
        text = s
    else:
        try:
            with open(text_or_path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read coefficients file {text_or_path!r}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON input: {e}") from e


def _parse_dicke(args_pair) -> QubitState:
    d_text, j_text = args_pair
    try:
        d = int(d_text)
    except ValueError:
        raise InputError(f"bad degree {d_text!r}") from None
    parts = j_text.split(",")
    try:
        j = tuple(int(t) for t in parts)
    except ValueError:
        raise InputError(f"bad index {j_text!r}: expected j1,j2") from None
    if len(j) != 2:
        raise InputError(f"bad index {j_text!r}: expected two comma-separated integers")
    return standard_basis_state(d, (j[0], j[1]))


def load_state(args) -> QubitState:
    if getattr(args, "dicke", None) is not None and getattr(args, "coeffs", None) is not None:
        raise InputError("give either --coeffs or --dicke, not both")
    if getattr(args, "dicke", None) is not None:
        return _parse_dicke(args.dicke)
    if getattr(args, "coeffs", None) is not None:
        return state_from_json(_load_doc(args.coeffs), d_flag=args.d)
    raise InputError("no input state: give --coeffs or --dicke")


def parse_fields(text: str) -> list[str]:
    fields = []
    for part in text.split(","):
        part = part.strip()
        if part not in ("complex", "real"):
            raise InputError(f"unknown field {part!r}: expected complex, real, or complex,real")
        if part not in fields:
            fields.append(part)
    return fields


# -- report assembly -------------------------------------------------------------

def _result_dict(res) -> dict:
    root = res.witness_root
    return {
        "sigma": float(res.sigma),
        "witness": [_pair(res.witness.x0), _pair(res.witness.x1)],
        "witness_root": "inf" if math.isinf(abs(complex(root))) else _pair(root),
        "method": res.method,
        "bracket_halfwidth": float(res.bracket_halfwidth),
    }


def _root_dict(c, scale: float = 1.0) -> dict:
    # candidate lambdas refer to the normalized state; scale restores the
    # input's size so max lambda_q over R matches the reported sigma
    return {
        "z": _pair(c.z),
        "multiplicity": int(c.multiplicity),
        "lambda_q": float(c.lambda_q * scale),
        "lambda_v": float(c.lambda_v * scale),
        "in_R": bool(c.in_R),
        "in_R_real": bool(c.in_Rprime),
        "real": bool(c.in_R1prime),
    }


def _census_dict(cn) -> dict:
    return {
        "fixed_point_degree": int(cn.fixed_point_degree),
        "mu_reported": int(cn.mu_reported),
        "lower_bound": int(cn.lower_bound),
        "upper_bound": int(cn.upper_bound),
        "nonsingular": bool(cn.nonsingular),
        "bounds_satisfied": None if cn.bounds_satisfied is None else bool(cn.bounds_satisfied),
    }


def _exceptional_dict(state: QubitState) -> dict | None:
    if state.d == 2:
        return None
    sn = normalize(state)
    uv = build_uv(sn, build_pq(sn))
    level = exceptionality(uv)
    if level > EXCEPTIONAL_REL:
        return None
    cls = detect_exceptional(state)
    out: dict = {"kind": cls.kind}
    if cls.A is not None:
        out["amplitude"] = _pair(cls.A)
    for name in ("k", "c", "p", "phase_s", "alpha", "beta"):
        val = getattr(cls, name)
        if val is not None:
            out[name] = val
    return out


def compute_report(state: QubitState, fields: list[str], tol: float,
                   want_roots: bool, want_oracle: bool, seed: int) -> dict:
    nrm = hs_norm(state)
    if nrm == 0.0:
        raise ZeroState("spectral norm of the zero tensor is undefined")
    report: dict = {
        "tool": "specnorm",
        "version": __version__,
        "input": {"d": state.d, "s": [_pair(z) for z in state.s]},
        "hs_norm": float(nrm),
    }

    report["exceptional"] = _exceptional_dict(state)

    results: dict = {}
    for field in fields:
        results[field] = _result_dict(spectral_norm(state, field, tol=tol))
    report["results"] = results

    if abs(nrm - 1.0) <= UNIT_TOL:
        if "complex" in results:
            sigma_c = results["complex"]["sigma"]
        else:
            sigma_c = spectral_norm(state, "complex", tol=tol).sigma
        sigma_unit = sigma_c / nrm
        report["eta"] = -2.0 * math.log2(sigma_unit)
        report["eta_rel"] = report["eta"] - math.log2(state.d + 1)

    if want_roots:
        try:
            cands = candidate_roots(state)
        except ExceptionalFamily:
            cands = []
        report["roots"] = [_root_dict(c, scale=nrm) for c in cands]

    try:
        report["census"] = _census_dict(anti_eigen_census(state))
    except ExceptionalFamily:
        report["census"] = None

    if want_oracle:
        field = fields[0]
        cfg = OracleConfig(seed=seed)
        value, arg = oracle_max(state, field, cfg)
        report["oracle"] = {
            "field": field,
            "value": float(value),
            "argmax": [_pair(arg.x0), _pair(arg.x1)],
            "restarts": cfg.restarts,
            "seed": cfg.seed,
        }
    return report


# -- table rendering ---------------------------------------------------------------

def _cfmt(z: complex, digits: int = 6) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def render_table(report: dict) -> str:
    lines = [f"specnorm {report['version']}"]
    d = report["input"]["d"]
    lines.append(f"d = {d}    hs_norm = {report['hs_norm']:.12g}")
    exc = report.get("exceptional")
    if exc is not None:
        bits = ", ".join(f"{k}={v}" for k, v in exc.items() if k != "kind")
        lines.append(f"exceptional family: {exc['kind']}" + (f" ({bits})" if bits else ""))
    for field, res in report["results"].items():
        root = res["witness_root"]
        root_s = "inf" if root == "inf" else _cfmt(complex(root[0], root[1]))
        w0 = _cfmt(complex(*res["witness"][0]))
        w1 = _cfmt(complex(*res["witness"][1]))
        lines.append(
            f"sigma ({field}) = {res['sigma']:.12g}    method = {res['method']}"
            f"    witness_root = {root_s}    witness = ({w0}, {w1})"
        )
    if "eta" in report:
        lines.append(f"eta = {report['eta']:.12g}    eta_rel = {report['eta_rel']:.12g}")
    census = report.get("census")
    if census is not None:
        lines.append(
            f"census: degree {census['fixed_point_degree']}, mu = {census['mu_reported']}"
            f" in [{census['lower_bound']}, {census['upper_bound']}],"
            f" nonsingular = {census['nonsingular']}"
        )
    if "oracle" in report:
        o = report["oracle"]
        lines.append(f"oracle ({o['field']}, {o['restarts']} restarts) = {o['value']:.12g}")
    roots = report.get("roots")
    if roots is not None:
        lines.append("")
        lines.append(f"{'z':>24}  {'field':>5}  {'lambda_q':>12}  {'lambda_v':>12}  membership")
        for r in roots:
            z = complex(r["z"][0], r["z"][1])
            kind = "R" if r["real"] else "C"
            member = "in R" if r["in_R"] else "excluded"
            if r["multiplicity"] > 1:
                member += f" (x{r['multiplicity']})"
            lines.append(
                f"{_cfmt(z):>24}  {kind:>5}  {r['lambda_q']:>12.6f}  {r['lambda_v']:>12.6f}  {member}"
            )
    return "\n".join(lines)


# -- compute (single and batch) ----------------------------------------------------

def _threads() -> int:
    text = os.environ.get("SPECNORM_THREADS", "")
    if text:
        try:
            n = int(text)
        except ValueError:
            raise InputError(f"bad SPECNORM_THREADS value {text!r}") from None
        if n < 1:
            raise InputError(f"bad SPECNORM_THREADS value {n}")
        return n
    return min(32, os.cpu_count() or 1)


def cmd_compute(args) -> int:
    fields = parse_fields(args.field)
    if args.batch is not None:
        if args.coeffs is not None or args.dicke is not None:
            raise InputError("--batch replaces --coeffs/--dicke")
        return _run_batch(args, fields)
    state = load_state(args)
    report = compute_report(state, fields, args.tol, args.roots, args.oracle, args.seed)
    if args.format == "table":
        print(render_table(report))
    else:
        print(dumps(report))
    return 0


def _batch_line(line: str, args, fields: list[str]):
    doc = json.loads(line)
    state = state_from_json(doc)
    return compute_report(state, fields, args.tol, args.roots, args.oracle, args.seed)


def _run_batch(args, fields: list[str]) -> int:
    try:
        with open(args.batch, "r", encoding="utf-8") as fh:
            lines = [ln for ln in (raw.strip() for raw in fh) if ln]
    except OSError as e:
        raise InputError(f"cannot read batch file {args.batch!r}: {e}") from e
    worst = 0

    def work(line: str):
        try:
            return _batch_line(line, args, fields), 0
        except json.JSONDecodeError as e:
            return {"error": {"type": "InputError", "message": f"bad JSON: {e}"}}, 2
        except InputError as e:
            return {"error": {"type": type(e).__name__, "message": str(e)}}, 2
        except ComputationError as e:
            return {"error": {"type": type(e).__name__, "message": str(e)}}, 3

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        for report, code in pool.map(work, lines):
            worst = max(worst, code)
            print(dumps(report))
    return worst


# -- oracle and census subcommands ---------------------------------------------------

def cmd_oracle(args) -> int:
    state = load_state(args)
    fields = parse_fields(args.field)
    field = fields[0]
    cfg = OracleConfig(seed=args.seed)
    value, arg = oracle_max(state, field, cfg)
    report = {
        "tool": "specnorm",
        "version": __version__,
        "input": {"d": state.d, "s": [_pair(z) for z in state.s]},
        "field": field,
        "value": float(value),
        "argmax": [_pair(arg.x0), _pair(arg.x1)],
        "restarts": cfg.restarts,
        "seed": cfg.seed,
    }
    if args.format == "table":
        print(f"specnorm {__version__}")
        print(f"oracle ({field}, {cfg.restarts} restarts, seed {cfg.seed}) = {value:.12g}")
        print(f"argmax = ({_cfmt(arg.x0)}, {_cfmt(arg.x1)})")
    else:
        print(dumps(report))
    return 0


def cmd_census(args) -> int:
    state = load_state(args)
    cn = anti_eigen_census(state)
    report = {
        "tool": "specnorm",
        "version": __version__,
        "input": {"d": state.d, "s": [_pair(z) for z in state.s]},
        "census": _census_dict(cn),
    }
    if args.format == "table":
        print(f"specnorm {__version__}")
        c = report["census"]
        print(f"fixed-point degree {c['fixed_point_degree']}, mu = {c['mu_reported']}"
              f" in [{c['lower_bound']}, {c['upper_bound']}]")
        print(f"nonsingular = {c['nonsingular']}, bounds_satisfied = {c['bounds_satisfied']}")
    else:
        print(dumps(report))
    return 0


# -- reproduce ------------------------------------------------------------------------

def _check(dev: float, tol: float) -> str:
    return "ok" if dev <= tol else "FAIL"


def _match_roots(stated, computed, tol_scale: float = 2e-3) -> bool:
    """Every stated root value has a computed root nearby."""
    for ref in stated:
        ref = complex(ref)
        tol = tol_scale * (1.0 + abs(ref))
        if not any(abs(complex(z) - ref) <= tol for z in computed):
            return False
    return True


def _reproduce_appendix() -> int:
    print("worked-example corpus (tolerance 5e-4 on sigma)")
    print(f"{'label':<6} {'d':>3} {'sigma_c':>12} {'ref_c':>9} {'dev_c':>9} "
          f"{'sigma_r':>12} {'ref_r':>9} {'dev_r':>9} {'portrait'}")
    failures = 0
    for rc in golden.REFERENCE_CASES:
        d = len(rc.coeffs) - 1
        state = normalize(make_state(d, rc.coeffs))
        res_c = spectral_norm(state, "complex")
        res_r = spectral_norm(state, "real")
        dev_c = abs(res_c.sigma - rc.sigma_c)
        dev_r = abs(res_r.sigma - rc.sigma_r)
        sigma_ok = dev_c <= 5e-4 and dev_r <= 5e-4

        cands = candidate_roots(state)
        n_distinct = len(cands)
        zero_mult = sum(c.multiplicity for c in cands if c.z == 0)
        n_real = sum(1 for c in cands if c.in_R1prime)
        w = fixed_point_polynomial(build_uv(state, build_pq(state)))
        portrait_ok = (
            int(w.degree) == rc.w_degree
            and n_distinct == rc.n_distinct
            and zero_mult == rc.zero_mult
            and n_real == rc.n_real
        )

        membership_ok = True
        if rc.excluded is not None:
            out_set = [c.z for c in cands if not c.in_R]
            membership_ok &= _match_roots(rc.excluded, out_set)
            membership_ok &= len(out_set) == len(rc.excluded)
        if rc.in_r is not None:
            in_set = [c.z for c in cands if c.in_R]
            membership_ok &= _match_roots(rc.in_r, in_set)
        if rc.real_roots is not None:
            reals = [c.z.real for c in cands if c.in_R1prime]
            membership_ok &= _match_roots(rc.real_roots, reals)
        if rc.table is not None:
            for z_ref, lam_ref in rc.table:
                near = [c for c in cands if abs(c.z - complex(z_ref)) <= 2e-3 * (1 + abs(complex(z_ref)))]
                membership_ok &= bool(near) and abs(near[0].lambda_q - lam_ref) <= 5e-4

        status = "ok" if (portrait_ok and membership_ok) else "FAIL"
        if not (sigma_ok and portrait_ok and membership_ok):
            failures += 1
        print(f"{rc.label:<6} {d:>3} {res_c.sigma:>12.8f} {rc.sigma_c:>9.4f} {dev_c:>9.1e} "
              f"{res_r.sigma:>12.8f} {rc.sigma_r:>9.4f} {dev_r:>9.1e} {status}")
    total = len(golden.REFERENCE_CASES)
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"result: {verdict} ({total - failures}/{total} blocks within tolerance)")
    return 0 if failures == 0 else 1


def _reproduce_two_root() -> int:
    print("two-root perturbation tables (tolerance 5e-5 per cell)")
    failures = 0
    cells = 0
    for m in (2, 3, 4):
        d = 2 * m
        ref = two_root_reference_state(m)
        limit = spectral_norm(ref, "real").sigma
        print(f"d = {d}: closed-form limit = {limit:.10f} "
              f"(reference {golden.TWO_ROOT_LIMIT[d]:.10f})")
        print(f"  {'eps':>8} {'sigma':>12} {'table':>9} {'dev':>9}")
        for eps, val in zip(golden.TWO_ROOT_EPS, golden.TWO_ROOT_TABLES[d]):
            st = perturbed_two_root_state(ref, eps)
            sig = spectral_norm(st, "real").sigma
            dev = abs(sig - val)
            cells += 1
            if dev > 5e-5:
                failures += 1
            print(f"  {eps:>8g} {sig:>12.8f} {val:>9.5f} {dev:>9.1e} {_check(dev, 5e-5)}")
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"result: {verdict} ({cells - failures}/{cells} cells within tolerance)")
    return 0 if failures == 0 else 1


def _eta_source_state(src: str) -> QubitState:
    if src.startswith("J("):
        inner = src[2:-1]
        d_text, j_text = inner.split(",", 1)
        j = tuple(int(t) for t in j_text.strip("()").split(","))
        return standard_basis_state(int(d_text), (j[0], j[1]))
    rc = golden.case(src)
    return normalize(make_state(len(rc.coeffs) - 1, rc.coeffs))


def _reproduce_table1() -> int:
    print("entanglement of the most-entangled known states per degree")
    print(f"{'d':>3} {'eta':>10} {'ref':>8} {'dev':>9} {'eta_rel':>10} {'ref':>9} {'status'}")
    failures = 0
    checked = 0
    for d, eta_ref, eta_rel_ref, src in golden.ETA_TABLE:
        if src is None:
            print(f"{d:>3} {'-':>10} {eta_ref:>8} {'-':>9} {'-':>10} {eta_rel_ref:>9} reference only")
            continue
        state = _eta_source_state(src)
        sigma = spectral_norm(state, "complex").sigma
        eta = -2.0 * math.log2(sigma)
        eta_rel = eta - math.log2(d + 1)
        tol = 1e-4 if d == 3 else 1e-3
        dev = abs(eta - eta_ref)
        dev_rel = abs(eta_rel - eta_rel_ref)
        checked += 1
        ok = dev <= tol and dev_rel <= tol
        if not ok:
            failures += 1
        print(f"{d:>3} {eta:>10.6f} {eta_ref:>8} {dev:>9.1e} {eta_rel:>10.6f} "
              f"{eta_rel_ref:>9} {_check(max(dev, dev_rel), tol)}")
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"result: {verdict} ({checked - failures}/{checked} checked rows within tolerance)")
    return 0 if failures == 0 else 1


_TARGETS = {
    "appendixA": _reproduce_appendix,
    "tables2to4": _reproduce_two_root,
    "table1": _reproduce_table1,
}


def cmd_reproduce(args) -> int:
    fn = _TARGETS.get(args.target)
    if fn is None:
        raise UnknownTarget(
            f"unknown target {args.target!r}: expected one of {', '.join(sorted(_TARGETS))}")
    return fn()


# -- entry point -----------------------------------------------------------------------

def _add_state_args(sp) -> None:
    sp.add_argument("--d", type=int, default=None,
                    help="number of qubit slots (cross-checked against the input)")
    sp.add_argument("--coeffs", metavar="PATH|JSON",
                    help="coefficients s_0..s_d as a JSON file or inline JSON")
    sp.add_argument("--dicke", nargs=2, metavar=("D", "J1,J2"),
                    help="standard basis state J(d, (j1, j2))")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="specnorm",
        description="Spectral norms and geometric entanglement of symmetric qubit states.")
    p.add_argument("--version", action="version", version=f"specnorm {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="norms, witnesses, diagnostics for one state")
    _add_state_args(pc)
    pc.add_argument("--field", default="complex",
                    help="complex, real, or complex,real (default complex)")
    pc.add_argument("--tol", type=float, default=1e-8, help="root residual target")
    pc.add_argument("--roots", action="store_true", help="include the root table")
    pc.add_argument("--oracle", action="store_true",
                    help="include the alternating-maximization lower bound")
    pc.add_argument("--seed", type=int, default=0, help="oracle RNG seed")
    pc.add_argument("--format", choices=("json", "table"), default="json")
    pc.add_argument("--batch", metavar="PATH",
                    help="jsonl file of inputs, one report per line, input order")
    pc.set_defaults(fn=cmd_compute)

    pr = sub.add_parser("reproduce", help="recompute a frozen reference table")
    pr.add_argument("target", help="appendixA, tables2to4, or table1")
    pr.set_defaults(fn=cmd_reproduce)

    po = sub.add_parser("oracle", help="alternating-maximization lower bound")
    _add_state_args(po)
    po.add_argument("--field", default="complex", help="complex or real")
    po.add_argument("--seed", type=int, default=0, help="RNG seed")
    po.add_argument("--format", choices=("json", "table"), default="json")
    po.set_defaults(fn=cmd_oracle)

    pn = sub.add_parser("census", help="anti-eigenpair count and bounds")
    _add_state_args(pn)
    pn.add_argument("--format", choices=("json", "table"), default="json")
    pn.set_defaults(fn=cmd_census)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"specnorm: input error: {e}", file=sys.stderr)
        return 2
    except ComputationError as e:
        print(f"specnorm: computation error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
