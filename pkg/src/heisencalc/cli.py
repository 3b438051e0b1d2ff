"""Command line front end.

Every subcommand wraps one family of library operations.  Output is JSON by
default; --plain gives the human-readable word-form rendering and --latex
the display-math rendering of matrices.  Exit codes: 0 success, 1 domain
error (bad input values, failed verification), 2 usage error.
"""

import argparse
import json
import sys

from . import aut, braid, heis, pairing, repmatrix, ring, schrodinger


def _add_format_flags(sp):
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--plain", dest="fmt", action="store_const", const="plain")
    fmt.add_argument("--latex", dest="fmt", action="store_const", const="latex")
    sp.set_defaults(fmt="json")


def _parse_specialize(text):
    if text in ("moriyama", "abelian"):
        return text, 0
    if text.startswith("torsion") and text[7:].isdigit():
        return "torsion", int(text[7:])
    raise ValueError(f"unknown specialization {text!r}")


def _specialize_poly(p, spec):
    target, order = spec
    if target == "moriyama":
        return ring.specialize_moriyama(p)
    if target == "abelian":
        return ring.specialize_abelianize(p)
    return ring.specialize_torsion(p, order)


def _emit_poly(p, fmt):
    if fmt == "json":
        print(json.dumps(p.to_json()))
    elif fmt == "latex":
        print(repmatrix.poly_latex(p))
    else:
        print(str(p))


def _emit_specialized(s, fmt):
    if fmt == "json":
        print(json.dumps([[list(k) if isinstance(k, tuple) else k, c]
                          for k, c in s.terms]))
    else:
        print(str(s))


def _emit_matrix(M, args):
    spec = getattr(args, "specialize", None)
    if spec:
        spec = _parse_specialize(spec)
        rows = repmatrix.specialize_matrix(M, spec[0], spec[1])
        if args.fmt == "json":
            print(json.dumps({"rows": M.rows, "cols": M.cols,
                              "entries": [[str(p) for p in row] for row in rows]}))
        else:
            for row in rows:
                print("[" + ", ".join(str(p) for p in row) + "]")
        return
    if args.fmt == "json":
        print(json.dumps(M.to_json()))
    elif args.fmt == "latex":
        print(repmatrix.matrix_latex(M))
    else:
        print(str(M))


def _builtin_matrix(name, genus):
    if name == "ta":
        return repmatrix.matrix_Ta()
    if name == "tb":
        return repmatrix.matrix_Tb()
    if name == "aba":
        return repmatrix.matrix_TaTbTa()
    if name == "boundary":
        return repmatrix.matrix_boundary_twist()
    if name == "separating":
        return repmatrix.matrix_separating_twist(genus)
    raise ValueError(f"unknown matrix {name!r}")


def cmd_phi(args):
    w = braid.BraidWord.parse(args.genus, args.strands, args.word)
    x = braid.phi(w)
    if args.fmt == "json":
        print(json.dumps({"word": x.word_str(), "pair": x.pair_str()}))
    else:
        print(x.word_str())


def cmd_mul(args):
    result = ring.parse_poly(args.genus, args.exprs[0])
    for text in args.exprs[1:]:
        result = result * ring.parse_poly(args.genus, text)
    if args.specialize:
        _emit_specialized(_specialize_poly(result, _parse_specialize(args.specialize)),
                          args.fmt)
    else:
        _emit_poly(result, args.fmt)


def cmd_aut(args):
    if args.twist:
        phi = aut.twist_aut(args.genus, args.twist, args.index)
    elif args.inner:
        phi = aut.inner_of(heis.parse_element(args.genus, args.inner))
    elif args.witness:
        phi = aut.HeisAutomorphism.from_json(json.loads(args.witness))
        h = aut.inner_witness(phi)
        if h is None:
            print("not inner", file=sys.stderr)
            return 1
        print(h.word_str() if args.fmt != "json"
              else json.dumps({"word": h.word_str(), "pair": h.pair_str()}))
        return 0
    else:
        raise ValueError("need one of --twist, --inner, --witness")
    if args.inverse:
        phi = phi.inverse()
    print(json.dumps(phi.to_json()))
    return 0


def cmd_morita(args):
    if args.d is not None:
        w = [(name, exp) for name, exp in
             (lambda t: [(c.split("^")[0], int(c.split("^")[1]) if "^" in c else 1)
                         for c in t.split()])(args.word)]
        print(aut.morita_d(args.d, w))
        return 0
    if args.bounding_pair:
        table = aut.bounding_pair_table(args.genus)
    elif args.twist:
        table = aut.twist_pi1_table(args.genus, args.twist, args.index)
    else:
        raise ValueError("need --bounding-pair, --twist or --d")
    phi = aut.morita_crossed_hom(args.genus, table)
    print(json.dumps(phi.to_json()))
    return 0


def cmd_matrix(args):
    M = _builtin_matrix(args.name, args.genus)
    _emit_matrix(M, args)


def cmd_compose(args):
    mats = [_builtin_matrix(name, args.genus) for name in args.names]
    result = mats[0]
    for M in mats[1:]:
        result = repmatrix.compose_twisted(result, M)
    _emit_matrix(result, args)


def cmd_specialize(args):
    p = ring.parse_poly(args.genus, args.expr)
    _emit_specialized(_specialize_poly(p, _parse_specialize(args.specialize)),
                      args.fmt)


def cmd_pairing(args):
    if args.fixture:
        with open(args.fixture) as fh:
            data = json.load(fh)
        records = [pairing.IntersectionRecord.from_json(args.genus, d)
                   for d in data]
    elif args.builtin:
        records = pairing.worked_records(args.builtin, args.genus)
    else:
        raise ValueError("need --fixture or --builtin")
    _emit_poly(pairing.evaluate_pairing(records, args.genus, args.mode), args.fmt)


def cmd_schrodinger(args):
    if args.element:
        h = heis.parse_element(args.genus, args.element)
        U = schrodinger.schrodinger_matrix(args.N, args.genus, h)
        print(json.dumps(schrodinger.matrix_to_json(U)))
        return 0
    if args.weil:
        phi = aut.twist_aut(args.genus, args.weil, 1)
        phi = aut.HeisAutomorphism(args.genus, (0,) * (2 * args.genus), phi.S)
        U = schrodinger.weil_intertwiner(args.N, args.genus, phi)
        res = schrodinger.weil_residual(args.N, args.genus, phi, U)
        if res > args.tol:
            print(f"residual {res:.3e} above tolerance", file=sys.stderr)
            return 1
        print(json.dumps(schrodinger.matrix_to_json(U)))
        return 0
    report = schrodinger.verify_schrodinger_rep(args.N, args.genus, tol=args.tol)
    bad = [name for name, ok in report if not ok]
    for name, ok in report:
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    return 1 if bad else 0


def cmd_verify(args):
    checks = []
    checks.extend(heis.verify_presentation(args.genus))
    checks.extend(braid.verify_bellingeri(args.genus, args.strands))
    if args.all:
        Ma, Mb = repmatrix.matrix_Ta(), repmatrix.matrix_Tb()
        left = repmatrix.compose_twisted(repmatrix.compose_twisted(Ma, Mb), Ma)
        right = repmatrix.compose_twisted(repmatrix.compose_twisted(Mb, Ma), Mb)
        fixture = repmatrix.fixture_matrix("action_aba")
        checks.append(("braid identity", left.entries == right.entries))
        checks.append(("braid identity matches fixture",
                       left.entries == fixture.entries))
        Md = repmatrix.matrix_boundary_twist()
        checks.append(("boundary twist matches fixture",
                       Md.entries == repmatrix.fixture_matrix("boundary_twist").entries))
        checks.append(("boundary twist dies in the u-quotient",
                       repmatrix.is_specialized_identity(
                           repmatrix.specialize_matrix(Md, "moriyama"))))
        checks.extend(schrodinger.verify_schrodinger_rep(3, 1, tol=args.tol))
    bad = [name for name, ok in checks if not ok]
    for name, ok in checks:
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    return 1 if bad else 0


def build_parser():
    ap = argparse.ArgumentParser(prog="heisencalc",
                                 description="Exact Heisenberg-group calculator")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("phi", help="image of a braid word in the group")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--strands", type=int, default=2)
    sp.add_argument("word")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_phi)

    sp = sub.add_parser("mul", help="multiply group ring expressions")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--specialize")
    sp.add_argument("exprs", nargs="+")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_mul)

    sp = sub.add_parser("aut", help="automorphisms: twists, inner, witnesses")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--twist", choices=["a", "b"])
    sp.add_argument("--index", type=int, default=1)
    sp.add_argument("--inner")
    sp.add_argument("--witness")
    sp.add_argument("--inverse", action="store_true")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_aut)

    sp = sub.add_parser("morita", help="crossed homomorphism from a pi_1 action")
    sp.add_argument("--genus", type=int, default=2)
    sp.add_argument("--bounding-pair", action="store_true")
    sp.add_argument("--twist", choices=["a", "b"])
    sp.add_argument("--index", type=int, default=1)
    sp.add_argument("--d", type=int)
    sp.add_argument("--word", default="")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_morita)

    sp = sub.add_parser("matrix", help="built-in twist matrices")
    sp.add_argument("name", choices=["ta", "tb", "aba", "boundary", "separating"])
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--specialize")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_matrix)

    sp = sub.add_parser("compose", help="twisted composite of built-in matrices")
    sp.add_argument("names", nargs="+",
                    choices=["ta", "tb", "aba", "boundary", "separating"])
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--specialize")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_compose)

    sp = sub.add_parser("specialize", help="specialize a group ring expression")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--specialize", required=True)
    sp.add_argument("expr")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_specialize)

    sp = sub.add_parser("pairing", help="evaluate intersection pairing data")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--fixture", help="path to a JSON list of records")
    sp.add_argument("--builtin",
                    choices=["ta-wb-wa", "ta-wb-vab", "s-entry"])
    sp.add_argument("--mode", choices=["paper-formula", "oriented"],
                    default="paper-formula")
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_pairing)

    sp = sub.add_parser("schrodinger", help="finite representation matrices")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--element")
    sp.add_argument("--weil", choices=["a", "b"])
    sp.add_argument("--tol", type=float, default=1e-10)
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_schrodinger)

    sp = sub.add_parser("verify", help="run the relation and matrix checks")
    sp.add_argument("--genus", type=int, default=1)
    sp.add_argument("--strands", type=int, default=2)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--tol", type=float, default=1e-10)
    _add_format_flags(sp)
    sp.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code = args.fn(args)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
