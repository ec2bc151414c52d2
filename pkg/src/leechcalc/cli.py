"""Command line entry point: ``leechcalc <subcommand> ...``.

Exit status 0 on success, 2 on a domain error (message on stderr), 64 on a
usage error, 1 when ``verify-all`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import Callable, Sequence

from . import characters as ch
from . import classify as cl
from . import frames as fr
from . import lattice as la
from . import lie
from . import niemeier as nm
from . import twisted as tw
from .errors import DomainError
from .report import dumps

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# lie


def _cmd_lie(a) -> dict:
    if a.all:
        rows = []
        for t in lie.all_types(a.max_rank):
            info = lie.algebra_info(t)
            rr = lie.weyl_vector_norm(t)
            rows.append({"type": str(t), "dim": info.dim, "dual_coxeter": info.dual_coxeter,
                         "rho_norm": rr, "strange": rr == Fraction(info.dual_coxeter * info.dim, 12)})
        return {"types": rows, "all_hold": all(r["strange"] for r in rows)}
    t = lie.SimpleLieType.parse(a.type)
    info = lie.algebra_info(t)
    rs = lie.root_system(t)
    out = {"type": str(t), "rank": t.rank, "dim": info.dim, "coxeter": info.coxeter,
           "dual_coxeter": info.dual_coxeter, "lacing": info.lacing,
           "positive_roots": len(rs.positive_roots), "cartan": [list(r) for r in rs.cartan],
           "comarks": list(rs.comarks), "rho_norm": lie.weyl_vector_norm(t),
           "weyl_group_order": lie.weyl_group_order(t)}
    if a.weight is not None:
        lam = lie.parse_weight(a.weight, t)
        lo, hi = lie.pairing_extremes(t, lam)
        out["weight"] = {"labels": list(lam), "level": lie.weight_level(t, lam),
                         "dimension": lie.weyl_dimension(t, lam),
                         "rho_pairing_min": lo, "rho_pairing_max": hi}
    if a.level is not None:
        ws = lie.integrable_weights(lie.LevelledAlgebra(t, a.level))
        out["integrable_weights"] = [list(w) for w in ws]
    return out


# ---------------------------------------------------------------------------
# lattices


def _lattice_summary(lat: la.GramLattice, bound: int) -> dict:
    out = {"rank": lat.rank, "determinant": la.determinant(lat),
           "signature": list(lat.signature), "integral": lat.is_integral()}
    if lat.is_integral():
        out["even"] = la.is_even(lat)
        out["unimodular"] = la.is_unimodular(lat)
        if out["determinant"] != 0:
            _, disc = la.dual_and_discriminant(lat)
            out["discriminant_invariants"] = list(disc.invariants)
            out["discriminant_order"] = disc.order
    if lat.is_positive_definite():
        sv = la.short_vectors(lat, bound)
        out["bound"] = bound
        out["vector_counts"] = {str(k): v for k, v in sorted(sv.by_norm().items())}
    return out


def _cmd_lattice(a) -> dict:
    if a.file:
        with open(a.file, encoding="utf-8") as fh:
            lat = la.loads(fh.read())
        src = a.file
    elif a.cartan:
        t = lie.SimpleLieType.parse(a.cartan)
        rs = lie.root_system(t)
        lat = la.GramLattice.from_rows([[rs.form(x, y) for y in rs.simple_roots]
                                        for x in rs.simple_roots])
        src = f"root lattice {t}"
    elif a.niemeier:
        lat = nm.build_niemeier(nm.NiemeierName.parse(a.niemeier))
        src = f"Niemeier {a.niemeier}"
    else:
        raise DomainError("give one of --file, --cartan, --niemeier")
    bound = a.bound if a.bound is not None else (4 if a.deep else 2)
    return {"source": src, **_lattice_summary(lat, bound)}


def _names(text: str | None) -> list[nm.NiemeierName]:
    return [nm.NiemeierName.parse(text)] if text else nm.all_names()


def _cmd_niemeier(a) -> dict:
    return {"reports": [nm.niemeier_report(n, deep=a.deep).as_dict() for n in _names(a.name)]}


def _cmd_hole(a) -> dict:
    name = nm.NiemeierName.parse(a.niemeier)
    rep = nm.niemeier_report(name, deep=a.deep)
    leech = nm.hole_construction(name)
    out = rep.as_dict()
    out["even"] = la.is_even(leech)
    out["determinant"] = la.determinant(leech)
    if a.write:
        with open(a.write, "w", encoding="utf-8") as fh:
            fh.write(la.dumps(leech))
        out["written"] = a.write
    return out


# ---------------------------------------------------------------------------
# classification


def _cmd_classify(a) -> dict:
    if a.case:
        return cl.case_inequality_report(a.case).as_dict()
    if a.candidate:
        return cl.w_report(cl.Candidate.parse(a.candidate)).as_dict()
    if a.rank is None:
        raise DomainError("give --rank, --case or --candidate")
    cands = cl.enumerate_candidates(a.rank, strict=a.strict, composite_n0=a.composite_n0,
                                    composite_k0=a.composite_k0)
    return {"rank": a.rank, "strict": a.strict, "composite_n0": a.composite_n0,
            "composite_k0": a.composite_k0, "count": len(cands),
            "candidates": [cl.w_report(c).as_dict() for c in cands]}


# ---------------------------------------------------------------------------
# frame shapes


def _cmd_frames(a) -> dict:
    f = fr.FrameShape.parse(a.shape)
    out: dict = {"shape": str(f)}
    if a.op == "power":
        p = fr.power(f, a.k)
        out.update({"k": a.k, "power": str(p), "trace": fr.trace(p)})
        try:
            out["classes"] = list(fr.classify_shape(p))
        except DomainError:
            out["classes"] = []
    elif a.op == "fixdim":
        out["fixed_dim"] = fr.fixed_dim(f)
    elif a.op == "eigmult":
        out.update({"r": a.r, "multiplicity": fr.eig_mult(f, a.r)})
    else:
        out.update({"classes": list(fr.classify_shape(f)), "trace": fr.trace(f),
                    "order": f.order, "fixed_dim": fr.fixed_dim(f)})
    return out


# ---------------------------------------------------------------------------
# character sums


def _pins(items: Sequence[str]) -> dict[tuple[int, int], str]:
    out = {}
    for s in items or ():
        lab, _, name = s.partition("=")
        try:
            i, j = (int(x) for x in lab.split(","))
        except ValueError:
            raise DomainError(f"cannot parse pin {s!r}; expected i,j=CLASS") from None
        out[(i, j)] = name
    return out


def _case_i() -> dict:
    results = []
    for row in ch.subgroup_rows():
        if (row.a, row.b, row.dim) != (2, 4, 6):
            continue
        for g in ch.assignments(row):
            r = ch.z2z4_formula(g)
            results.append({"row": row.number, "sigma": r.sigma_class, "chi_tau2": r.chi_tau2,
                            "chi_tau2_sigma": r.chi_tau2_sigma, "chi_sigma": r.chi_sigma,
                            "scaled": r.value})
    relevant = [r for r in results if r["sigma"] != "-2A"]
    return {"case": "i", "scale": 8, "assignments": results,
            "verdict": all(r["scaled"] > 0 for r in relevant)}


def _cmd_characters(a) -> dict:
    if a.case == "i":
        return _case_i()
    if a.case == "ii":
        row, R, te, pins = 10, 4, 1, {}
    elif a.case == "iii":
        row, R, te, pins = 9, 6, 5, {(1, 0): "6E", (0, 1): "2A"}
    else:
        if a.row is None:
            raise DomainError("give --row or --case")
        row, R, te, pins = a.row, a.R, a.tau_exp, _pins(a.pin)
    theta = ch.LinearCharacter(R, te, a.sigma_exp)
    out = []
    for g in ch.assignments(ch.subgroup_row(row), pins=pins):
        ip = ch.inner_product(g, theta)
        out.append({"classes": {f"{i},{j}": n for (i, j), n in g.classes},
                    "inner_product": ip.rational, "scaled": ip.scaled})
    if not out:
        raise DomainError(f"no consistent class assignment for row {row}")
    return {"row": row, "R": R, "tau_exp": te, "sigma_exp": a.sigma_exp,
            "assignments": out,
            "verdict": all(r["inner_product"] is not None and r["inner_product"] > 0 for r in out)}


# ---------------------------------------------------------------------------
# twisted weights


def _component(text: str):
    """``A1,2`` or ``A1,2:1`` (type, level, optional Dynkin labels)."""
    head, _, lam = text.partition(":")
    t_text, _, k_text = head.partition(",")
    try:
        k = int(k_text)
    except ValueError:
        raise DomainError(f"cannot parse component {text!r}; expected TYPE,LEVEL[:LABELS]") from None
    t = lie.SimpleLieType.parse(t_text)
    return t, k, (lie.parse_weight(lam, t) if lam else None)


def _cmd_twisted(a) -> dict:
    out: dict = {}
    if a.shift:
        try:
            n, k, m, s = (Fraction(x) for x in a.shift.split(","))
        except ValueError:
            raise DomainError("--shift expects N,K,m,s") from None
        p = tw.TwistParams(int(n), k, int(m), s)
        out["shift"] = {"N": p.N, "K": p.K, "m": p.m, "s": p.s,
                        "grading_shift": tw.grading_shift(p),
                        "alpha_zero_shift": p.alpha_zero_shift,
                        "integer_sector": tw.integer_weight_sector(p.N, p.K)}
    comps = [_component(c) for c in a.component or ()]
    if comps:
        rows = []
        total = Fraction(0)
        for t, k, lam in comps:
            if lam is None:
                w, argmins = tw.minimize_twisted_weight([(t, k)])
                rows.append({"type": str(t), "level": k, "min_weight": w,
                             "argmins": [list(x[0]) for x in argmins]})
            else:
                w = tw.twisted_conformal_weight([tw.WeightedComponent(t, k, lam)])
                rows.append({"type": str(t), "level": k, "weight": list(lam),
                             "conformal_weight": w})
            total += w
        out["components"] = rows
        out["total"] = total
    if not out:
        raise DomainError("give --component or --shift")
    return out


# ---------------------------------------------------------------------------
# full regression


def _check(name: str, fn: Callable[[], bool]) -> dict:
    t0 = time.perf_counter()
    try:
        ok = bool(fn())
        err = None
    except (AssertionError, DomainError) as e:
        ok, err = False, str(e)
    out = {"check": name, "ok": ok, "seconds": f"{time.perf_counter() - t0:.2f}"}
    if err:
        out["error"] = err
    return out


def _verify_strange() -> bool:
    return all(lie.weyl_vector_norm(t) == Fraction(lie.algebra_info(t).dual_coxeter
                                                   * lie.algebra_info(t).dim, 12)
               for t in lie.all_types())


def _verify_frames() -> bool:
    ok = len(fr.class_table()) > 0
    for r in fr.class_table():
        ok &= fr.from_cyclotomic(fr.to_cyclotomic(r.shape)) == r.shape
    ok &= fr.power_class("-4A", 2) == "-2A"
    ok &= fr.power_class("-6D", 2) == "3C"
    ok &= fr.power_class("-12E", 6) == "-2A" and fr.chi(fr.power_class("-12E", 6)) == -8
    ok &= fr.eig_mult(fr.class_row("-12E").shape, 6) == 0
    ok &= fr.eig_mult(fr.class_row("6C").shape, 3) == 1
    return ok


def _verify_holes(deep: bool) -> bool:
    ok = True
    for n in nm.all_names():
        rep = nm.niemeier_report(n, deep=deep and str(n) in ("A1^24", "D24"))
        ok &= rep.leech_certified and rep.weyl_norm == 2 * rep.h * (rep.h + 1)
        if rep.norm4_count is not None:
            ok &= rep.norm4_count == 196560
    return ok


def _verify_rank4() -> bool:
    got = {str(c): cl.w_report(c).alpha_norm for c in cl.enumerate_candidates(4)}
    return got == {"B4,14": 6, "C4,10": 6, "D4,36": 14, "F4,54/7": Fraction(26, 7),
                   "G2,24^2": 14}


def _verify_sweep() -> bool:
    found = {str(c) for cs in cl.sweep().values() for c in cs}
    cases = all(cl.case_inequality_report(c).contradiction for c in ("8", "9", "15"))
    return found == set(cl.FINAL_CASES) and cases


def _verify_characters() -> bool:
    ok = _case_i()["verdict"]
    ok &= ch.inner_product(ch.row_subgroup(10), ch.LinearCharacter(4)).scaled == 16
    g = ch.row_subgroup(9, pins={(1, 0): "6E", (0, 1): "2A"})
    ok &= ch.inner_product(g, ch.LinearCharacter(6, 5)).scaled == 12
    return ok


def _cmd_verify_all(a) -> dict:
    checks = [
        _check("strange_formula", _verify_strange),
        _check("frame_shapes", _verify_frames),
        _check("hole_constructions", lambda: _verify_holes(a.deep)),
        _check("rank4_classification", _verify_rank4),
        _check("composite_sweep", _verify_sweep),
        _check("character_sums", _verify_characters),
        _check("twisted_weights", lambda: tw.identity_grid().weights > 0),
    ]
    return {"checks": checks, "all_ok": all(c["ok"] for c in checks)}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leechcalc", description="Exact computations around the Leech lattice, "
                "Niemeier lattices and holomorphic VOA weight-one candidates.")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--deep", action="store_true", help="enable norm-4 enumeration")
    # the same flags are accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
    common.add_argument("--deep", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("lie", parents=[common], help="simple Lie algebra data")
    s.add_argument("--type")
    s.add_argument("--weight", help="Dynkin labels, e.g. 1,0,0")
    s.add_argument("--level", type=int)
    s.add_argument("--all", action="store_true", help="strange formula for every type")
    s.add_argument("--max-rank", type=int, default=24)
    s.set_defaults(func=_cmd_lie)

    s = sub.add_parser("lattice", parents=[common], help="invariants and short vectors of a lattice")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--file")
    g.add_argument("--cartan", help="root lattice of a simple type, e.g. E8")
    g.add_argument("--niemeier")
    s.add_argument("--bound", type=int)
    s.set_defaults(func=_cmd_lattice)

    s = sub.add_parser("niemeier", parents=[common], help="Niemeier reports")
    s.add_argument("--name")
    s.set_defaults(func=_cmd_niemeier)

    s = sub.add_parser("hole", parents=[common], help="Leech lattice from a Niemeier lattice")
    s.add_argument("--niemeier", required=True)
    s.add_argument("--write", help="write the Gram matrix to this file")
    s.set_defaults(func=_cmd_hole)

    s = sub.add_parser("classify", parents=[common], help="W-element candidate enumeration")
    s.add_argument("--rank", type=int)
    s.add_argument("--strict", action="store_true")
    s.add_argument("--composite-n0", action="store_true")
    s.add_argument("--composite-k0", action="store_true")
    s.add_argument("--case")
    s.add_argument("--candidate")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("frames", parents=[common], help="frame-shape calculus")
    s.add_argument("op", choices=("power", "fixdim", "eigmult", "classify"))
    s.add_argument("--shape", required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--r", type=int, default=1)
    s.set_defaults(func=_cmd_frames)

    s = sub.add_parser("characters", parents=[common], help="linear-character inner products")
    s.add_argument("--row", type=int)
    s.add_argument("--case", choices=("i", "ii", "iii"))
    s.add_argument("--R", type=int, default=1)
    s.add_argument("--tau-exp", type=int, default=1)
    s.add_argument("--sigma-exp", type=int, default=0)
    s.add_argument("--pin", action="append", help="i,j=CLASS")
    s.set_defaults(func=_cmd_characters)

    s = sub.add_parser("twisted", parents=[common], help="twisted-module conformal weights")
    s.add_argument("--component", action="append", help="TYPE,LEVEL[:LABELS]")
    s.add_argument("--shift", help="N,K,m,s")
    s.set_defaults(func=_cmd_twisted)

    s = sub.add_parser("verify-all", parents=[common], help="run the full regression")
    s.set_defaults(func=_cmd_verify_all)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if a.command == "lie" and not a.all and not a.type:
            parser.error("lie needs --type or --all")
    except SystemExit as e:
        return int(e.code or 0)
    try:
        body = a.func(a)
    except DomainError as e:
        err.write(f"leechcalc: {e}\n")
        return 2
    report = {"command": argv, "outputs": body}
    out.write(dumps(report, a.format))
    if a.command == "verify-all" and not body["all_ok"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
