"""Batch command-line interface.

Every command reads JSON files, prints a single JSON document on stdout, and
is deterministic.  All rationals travel as "p/q" strings (plain integers are
accepted on input).  Exit codes: 0 on success, 1 on domain errors, 2 on
argument errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import codes
from .distributions import (
    fiber_distribution,
    lattice_distribution,
    pcube_distribution,
    reconstruct_from_first_row,
    vertex_distribution,
)
from .equitable import (
    PerfectStructure,
    all_one_coloring,
    check_completely_regular,
    distance_coloring,
    lattice_coloring,
    load_coloring,
    load_structure,
    quotient_matrix,
    structure_from_coloring,
    verify_structure,
)
from .errors import EqpartError
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    decode_word,
    direct_product,
    graph_to_json,
    halved_cube,
    hamming_graph,
    johnson_graph,
    load_graph,
)
from .localdist import reconstruct_local, tensor_distribution, tensor_structure
from .oracle import brute_distribution
from .ratmat import RatMatrix, from_json, parse_rational


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise EqpartError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise EqpartError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix_file(path: str) -> RatMatrix:
    doc = _load_json(path)
    if isinstance(doc, dict):
        for key in ("s", "matrix", "params", "R"):
            if key in doc:
                doc = doc[key]
                break
        else:
            raise EqpartError(f"{path} holds no matrix under a known key")
    return from_json(doc)


def _load_code_file(path: str) -> list[int]:
    doc = _load_json(path)
    if isinstance(doc, dict):
        doc = doc.get("vertices")
    if not isinstance(doc, list):
        raise EqpartError(f"{path} does not hold a vertex list")
    return [int(v) for v in doc]


def _parse_row(text: str) -> list[Fraction]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EqpartError(f"row argument is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise EqpartError("row argument must be a JSON array")
    return [parse_rational(x) for x in doc]


def _emit(doc) -> None:
    print(json.dumps(doc))


def _load_f(args, graph, budget) -> PerfectStructure | None:
    """Read the structure being distributed, from --coloring or --structure."""
    if getattr(args, "coloring", None):
        col = load_coloring(_load_json(args.coloring), budget)
        if graph is not None and not col.graph.same_adjacency(graph):
            raise EqpartError("coloring file is over a different graph")
        host = graph if graph is not None else col.graph
        return structure_from_coloring(host, col)
    if getattr(args, "structure", None):
        struct = load_structure(_load_json(args.structure), budget)
        if graph is not None:
            if not hasattr(struct.host, "same_adjacency") or not struct.host.same_adjacency(graph):
                raise EqpartError("structure file is over a different graph")
        return struct
    return None


def _distrib_output(args, rows: RatMatrix, graph, code, f: PerfectStructure | None):
    if args.verify_oracle:
        if f is None:
            raise EqpartError("--verify-oracle needs --coloring or --structure")
        brute = brute_distribution(graph, code, f)
        if brute != rows:
            raise EqpartError(
                "formula and oracle disagree:\nformula:\n%s\noracle:\n%s" % (rows, brute)
            )
    _emit({"rows": rows.to_strings()})
    return 0


# -- commands ---------------------------------------------------------------


def _cmd_gen(args) -> int:
    budget = args.vertex_budget
    if args.family == "hamming":
        g = hamming_graph(args.n, args.q, budget)
    elif args.family == "johnson":
        g = johnson_graph(args.n, args.k, budget)
    elif args.family == "halved":
        g = halved_cube(args.n, args.sign, budget)
    else:
        left = load_graph(_load_json(args.left), budget)
        right = load_graph(_load_json(args.right), budget)
        g = direct_product(left, right, budget)
    _emit(graph_to_json(g))
    return 0


def _cmd_quotient(args) -> int:
    g = load_graph(_load_json(args.graph), args.vertex_budget)
    col = load_coloring(_load_json(args.coloring), args.vertex_budget)
    if not col.graph.same_adjacency(g):
        raise EqpartError("coloring file is over a different graph")
    s = quotient_matrix(g, col)
    _emit({"k": col.n_colors, "s": s.to_strings()})
    return 0


def _cmd_verify(args) -> int:
    struct_doc = _load_json(args.structure)
    from .ratmat import from_json as mat

    if "graph" in struct_doc:
        host = load_graph(struct_doc["graph"], args.vertex_budget)
    else:
        host = mat(struct_doc["matrix"])
    ok, residual = verify_structure(host, mat(struct_doc["f"]), mat(struct_doc["s"]))
    _emit({"ok": ok, "residual": residual.to_strings()})
    return 0 if ok else 1


def _cmd_crc_check(args) -> int:
    g = load_graph(_load_json(args.graph), args.vertex_budget)
    code = _load_code_file(args.code)
    crc = check_completely_regular(g, code)
    _emit({"rho": crc.rho, "R": crc.params.to_strings()})
    return 0


def _cmd_distrib_vertex(args) -> int:
    g = load_graph(_load_json(args.graph), args.vertex_budget)
    f = _load_f(args, g, args.vertex_budget)
    if args.s:
        s = _load_matrix_file(args.s)
    elif f is not None:
        s = f.params
    else:
        raise EqpartError("need --s or --coloring to know the parameter matrix")
    dist = vertex_distribution(g, s, args.color)
    code = None
    if args.verify_oracle:
        if f is None:
            raise EqpartError("--verify-oracle needs --coloring or --structure")
        if f.coloring is None:
            raise EqpartError("--verify-oracle for a vertex needs a coloring")
        code = [f.coloring.colors.index(args.color)]
    return _distrib_output(args, dist.matrix, g, code, f)


def _cmd_distrib_code(args) -> int:
    g = load_graph(_load_json(args.graph), args.vertex_budget)
    code = _load_code_file(args.code)
    f = _load_f(args, g, args.vertex_budget)
    if f is None:
        raise EqpartError("need --coloring or --structure for the distributed values")
    crc = check_completely_regular(g, code)
    h0 = [Fraction(0)] * f.values.cols
    for v in code:
        for j, x in enumerate(f.values.row(v)):
            h0[j] += x
    dist = reconstruct_from_first_row(crc.params.transpose(), f.params, h0, crc.rho + 1)
    return _distrib_output(args, dist.matrix, g, code, f)


def _formula_inputs(args, graph, code, budget):
    """S and f0 for the closed-form commands, either given or derived from f."""
    f = _load_f(args, graph, budget)
    if args.s:
        s = _load_matrix_file(args.s)
    elif f is not None:
        s = f.params
    else:
        raise EqpartError("need --s/--f0 or --coloring/--structure")
    if args.f0:
        f0 = _parse_row(args.f0)
    elif f is not None:
        f0 = [Fraction(0)] * f.values.cols
        for v in code:
            for j, x in enumerate(f.values.row(v)):
                f0[j] += x
    else:
        raise EqpartError("need --f0 or --coloring/--structure")
    return s, f0, f


def _cmd_distrib_lattice(args) -> int:
    budget = args.vertex_budget
    base = lattice_coloring(args.m, args.k, args.q, budget)
    g = base.graph
    code = base.class_vertices(0)
    s, f0, f = _formula_inputs(args, g, code, budget)
    dist = lattice_distribution(args.m, args.k, args.q, s, f0)
    return _distrib_output(args, dist.matrix, g, code, f)


def _cmd_distrib_fiber(args) -> int:
    budget = args.vertex_budget
    left = load_graph(_load_json(args.left), budget)
    right = load_graph(_load_json(args.right), budget)
    if not left.is_regular():
        raise EqpartError("left factor must be regular")
    prod = direct_product(left, right, budget)
    code = [v1 * right.n for v1 in range(left.n)]
    s, f0, f = _formula_inputs(args, prod, code, budget)
    dist = fiber_distribution(right, left.degree(0), s, f0)
    return _distrib_output(args, dist.matrix, prod, code, f)


def _cmd_distrib_pcube(args) -> int:
    budget = args.vertex_budget
    g = hamming_graph(args.n, args.q, budget)
    code = [
        v for v in range(g.n) if all(x < args.p for x in decode_word(v, args.n, args.q))
    ]
    s, f0, f = _formula_inputs(args, g, code, budget)
    dist = pcube_distribution(args.n, args.p, args.q, s, f0)
    return _distrib_output(args, dist.matrix, g, code, f)


def _load_params_operand(path: str, budget: int) -> RatMatrix:
    doc = _load_json(path)
    if isinstance(doc, dict) and "colors" in doc:
        col = load_coloring(doc, budget)
        return quotient_matrix(col.graph, col)
    if isinstance(doc, dict):
        for key in ("s", "matrix", "params", "R"):
            if key in doc:
                return from_json(doc[key])
        raise EqpartError(f"{path}: expected a coloring or a matrix")
    return from_json(doc)


def _cmd_local_params(args) -> int:
    from .equitable import tensor_params

    r1 = _load_params_operand(args.left, args.vertex_budget)
    r2 = _load_params_operand(args.right, args.vertex_budget)
    _emit({"params": tensor_params(r1, r2).to_strings()})
    return 0


def _cmd_local_distrib(args) -> int:
    budget = args.vertex_budget
    left = load_coloring(_load_json(args.left), budget)
    right = load_coloring(_load_json(args.right), budget)
    g1 = structure_from_coloring(left.graph, left)
    g2 = structure_from_coloring(right.graph, right)
    prod = direct_product(left.graph, right.graph, budget)
    f = _load_f(args, prod, budget)
    if f is None:
        raise EqpartError("need --coloring or --structure for the distributed values")
    rd = tensor_distribution(g1, g2, f, budget)
    _emit(rd.to_json())
    return 0


def _cmd_local_reconstruct(args) -> int:
    g1 = load_graph(_load_json(args.graph), args.vertex_budget)
    r2 = _load_matrix_file(args.right_s)
    s = _load_matrix_file(args.s)
    h0 = _parse_row(args.h0)
    h_star = reconstruct_local(g1, r2, s, h0)
    _emit({"h_star": h_star.to_strings()})
    return 0


def _cmd_oracle(args) -> int:
    g = load_graph(_load_json(args.graph), args.vertex_budget)
    code = _load_code_file(args.code)
    f = _load_f(args, g, args.vertex_budget)
    if f is None:
        raise EqpartError("need --coloring or --structure for the summed values")
    rows = brute_distribution(g, code, f)
    _emit({"rows": rows.to_strings()})
    return 0


# -- selftest ---------------------------------------------------------------

_PRODUCT_PARAMS_3ARY_2CUBE = [
    [0, 4, 0, 4, 0, 0, 0, 0, 0],
    [1, 1, 2, 0, 4, 0, 0, 0, 0],
    [0, 2, 2, 0, 0, 4, 0, 0, 0],
    [1, 0, 0, 1, 4, 0, 2, 0, 0],
    [0, 1, 0, 1, 2, 2, 0, 2, 0],
    [0, 0, 1, 0, 2, 3, 0, 0, 2],
    [0, 0, 0, 2, 0, 0, 2, 4, 0],
    [0, 0, 0, 0, 2, 0, 1, 3, 2],
    [0, 0, 0, 0, 0, 2, 0, 2, 4],
]


def _selftest_checks():
    h23 = hamming_graph(2, 3)
    vcol = distance_coloring(h23, [0])

    def product_params_9x9():
        g1 = structure_from_coloring(h23, vcol)
        ts = tensor_structure(g1, g1)
        assert ts.params == from_json(_PRODUCT_PARAMS_3ARY_2CUBE)

    def code_params():
        g = hamming_graph(7, 2)
        crc = check_completely_regular(g, codes.hamming_code_vertices(3))
        assert crc.rho == 1
        assert crc.params == from_json([[0, 7], [1, 6]])

    def extended_code_params():
        g = hamming_graph(8, 2)
        crc = check_completely_regular(g, codes.extended_hamming_code_vertices(3))
        assert crc.rho == 2
        assert crc.params == from_json([[0, 8, 0], [1, 0, 7], [0, 8, 0]])

    def code_eigenfunction():
        g = hamming_graph(7, 2)
        members = set(codes.hamming_code_vertices(3))
        values = from_json([[7 if v in members else -1] for v in range(g.n)])
        ok, _ = verify_structure(g, values, from_json([[-1]]))
        assert ok

    def vertex_distribution_3ary_2cube():
        s = quotient_matrix(h23, vcol)
        dist = vertex_distribution(h23, s, 0)
        expect = from_json([[1, 0, 0], [0, 4, 0], [0, 0, 4]])
        assert dist.matrix == expect
        assert brute_distribution(h23, [0], vcol) == expect

    def lattice_quotient():
        col = lattice_coloring(2, 1, 2)
        s = quotient_matrix(col.graph, col)
        assert s == from_json([[0, 2], [2, 0]])

    def lattice_distribution_check():
        col = lattice_coloring(2, 2, 2)
        g = col.graph
        ones = all_one_coloring(g)
        s = quotient_matrix(g, ones)
        code = col.class_vertices(0)
        dist = lattice_distribution(2, 2, 2, s, [len(code)])
        assert dist.matrix == from_json([[4], [8], [4]])
        assert brute_distribution(g, code, ones) == dist.matrix

    return [
        ("product-params-9x9", product_params_9x9),
        ("code-params", code_params),
        ("extended-code-params", extended_code_params),
        ("code-eigenfunction", code_eigenfunction),
        ("vertex-distribution-3ary-2cube", vertex_distribution_3ary_2cube),
        ("lattice-quotient", lattice_quotient),
        ("lattice-distribution", lattice_distribution_check),
    ]


def _cmd_selftest(args) -> int:
    results = []
    all_ok = True
    for name, fn in _selftest_checks():
        try:
            fn()
            results.append({"name": name, "ok": True})
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            results.append({"name": name, "ok": False, "error": str(exc)})
            all_ok = False
    _emit({"ok": all_ok, "checks": results})
    return 0 if all_ok else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--vertex-budget",
        type=int,
        default=DEFAULT_VERTEX_BUDGET,
        help="abort rather than build graphs larger than this",
    )

    parser = argparse.ArgumentParser(
        prog="eqpart",
        description="exact weight distributions of equitable partitions and "
        "completely regular codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common], help="generate a graph as JSON")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_ham = gen_sub.add_parser("hamming", parents=[common])
    g_ham.add_argument("-n", type=int, required=True)
    g_ham.add_argument("-q", type=int, required=True)
    g_joh = gen_sub.add_parser("johnson", parents=[common])
    g_joh.add_argument("-n", type=int, required=True)
    g_joh.add_argument("-k", type=int, required=True)
    g_hal = gen_sub.add_parser("halved", parents=[common])
    g_hal.add_argument("-n", type=int, required=True)
    g_hal.add_argument("--sign", choices=["even", "odd"], default="even")
    g_pro = gen_sub.add_parser("product", parents=[common])
    g_pro.add_argument("--left", required=True)
    g_pro.add_argument("--right", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_quot = sub.add_parser("quotient", parents=[common], help="quotient matrix of a coloring")
    p_quot.add_argument("--graph", required=True)
    p_quot.add_argument("--coloring", required=True)
    p_quot.set_defaults(func=_cmd_quotient)

    p_ver = sub.add_parser("verify", parents=[common], help="check a perfect structure file")
    p_ver.add_argument("--structure", required=True)
    p_ver.set_defaults(func=_cmd_verify)

    p_crc = sub.add_parser(
        "crc-check", parents=[common], help="check a vertex set for complete regularity"
    )
    p_crc.add_argument("--graph", required=True)
    p_crc.add_argument("--code", required=True)
    p_crc.set_defaults(func=_cmd_crc_check)

    p_dis = sub.add_parser("distrib", parents=[common], help="closed-form distributions")
    dis_sub = p_dis.add_subparsers(dest="mode", required=True)

    def _dis(name):
        p = dis_sub.add_parser(name, parents=[common])
        p.add_argument("--s", help="parameter matrix file")
        p.add_argument("--f0", help="first row as a JSON array")
        p.add_argument("--coloring", help="coloring file for the distributed values")
        p.add_argument("--structure", help="structure file for the distributed values")
        p.add_argument("--verify-oracle", action="store_true")
        return p

    d_vertex = _dis("vertex")
    d_vertex.add_argument("--graph", required=True)
    d_vertex.add_argument("--color", type=int, required=True)
    d_vertex.set_defaults(func=_cmd_distrib_vertex)

    d_code = _dis("code")
    d_code.add_argument("--graph", required=True)
    d_code.add_argument("--code", required=True)
    d_code.set_defaults(func=_cmd_distrib_code)

    d_lat = _dis("lattice")
    d_lat.add_argument("-m", type=int, required=True)
    d_lat.add_argument("-k", type=int, required=True)
    d_lat.add_argument("-q", type=int, required=True)
    d_lat.set_defaults(func=_cmd_distrib_lattice)

    d_fib = _dis("fiber")
    d_fib.add_argument("--left", required=True, help="regular factor graph file")
    d_fib.add_argument("--right", required=True, help="distance-regular factor graph file")
    d_fib.set_defaults(func=_cmd_distrib_fiber)

    d_pc = _dis("pcube")
    d_pc.add_argument("-n", type=int, required=True)
    d_pc.add_argument("-p", type=int, required=True)
    d_pc.add_argument("-q", type=int, required=True)
    d_pc.set_defaults(func=_cmd_distrib_pcube)

    p_loc = sub.add_parser("local", parents=[common], help="product-structure machinery")
    loc_sub = p_loc.add_subparsers(dest="mode", required=True)
    l_par = loc_sub.add_parser("params", parents=[common])
    l_par.add_argument("--left", required=True, help="coloring or matrix file")
    l_par.add_argument("--right", required=True, help="coloring or matrix file")
    l_par.set_defaults(func=_cmd_local_params)
    l_dis = loc_sub.add_parser("distrib", parents=[common])
    l_dis.add_argument("--left", required=True, help="coloring file over the left factor")
    l_dis.add_argument("--right", required=True, help="coloring file over the right factor")
    l_dis.add_argument("--coloring", help="coloring file over the product")
    l_dis.add_argument("--structure", help="structure file over the product")
    l_dis.set_defaults(func=_cmd_local_distrib)
    l_rec = loc_sub.add_parser("reconstruct", parents=[common])
    l_rec.add_argument("--graph", required=True, help="distance-regular left factor")
    l_rec.add_argument("--right-s", required=True, dest="right_s")
    l_rec.add_argument("--s", required=True)
    l_rec.add_argument("--h0", required=True, help="first rearranged row as a JSON array")
    l_rec.set_defaults(func=_cmd_local_reconstruct)

    p_ora = sub.add_parser("oracle", parents=[common], help="brute-force distribution")
    p_ora.add_argument("--graph", required=True)
    p_ora.add_argument("--code", required=True)
    p_ora.add_argument("--coloring")
    p_ora.add_argument("--structure")
    p_ora.set_defaults(func=_cmd_oracle)

    p_self = sub.add_parser("selftest", parents=[common], help="run the built-in example suite")
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EqpartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
