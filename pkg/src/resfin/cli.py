"""Command line interface.

Machine-readable key=value records go to stdout, one record per line;
human commentary goes to stderr. Exit codes: 0 for a conclusive positive
outcome, 1 for a conclusive negative (counterexample, validation
failure), 2 for an inconclusive search (budget or bound reached), 64 for
usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from . import bench as bench_mod
from .catalog import (
    Catalog,
    CatalogFormatError,
    build_catalog,
    load_catalog,
    save_catalog,
)
from .detect import (
    SearchBudgetExceeded,
    abelian_k,
    detection_order,
    first_counterexample,
    psl2_witness,
    shortest_law,
)
from .groups import FiniteGroup, psl2, sl2
from .laws import POWER_LAW_MAX, commutator_word, law_word, power_law
from .parser import word_from_text
from .stallings import SubgroupGraph, divisibility
from .words import render

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

DEFAULT_CATALOG_ENV = "RESFIN_CATALOG"
DEFAULT_CATALOG_PATH = "resfin.cat"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(**fields) -> None:
    print(" ".join(f"{k}={v}" for k, v in fields.items()))


def _note(text: str) -> None:
    print(text, file=sys.stderr)


def _catalog_path(args) -> str:
    if args.catalog:
        return args.catalog
    return os.environ.get(DEFAULT_CATALOG_ENV, DEFAULT_CATALOG_PATH)


def _load_catalog_arg(args) -> Catalog:
    path = _catalog_path(args)
    if not os.path.exists(path):
        raise UsageError(
            f"catalog file {path!r} not found; build one with 'catalog build'"
        )
    return load_catalog(path)


def _resolve_group(spec: str, entry_id: str | None) -> FiniteGroup:
    if spec.startswith("sl2:") or spec.startswith("psl2:"):
        kind, _, prime = spec.partition(":")
        try:
            p = int(prime)
        except ValueError:
            raise UsageError(f"bad prime in group spec {spec!r}")
        return sl2(p) if kind == "sl2" else psl2(p)
    if not os.path.exists(spec):
        raise UsageError(f"group spec {spec!r} is neither sl2:P, psl2:P nor a file")
    catalog = load_catalog(spec)
    if entry_id is None:
        raise UsageError("a catalog file group spec needs --id")
    return catalog.get(entry_id).group


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def build_arg_parser() -> _Parser:
    p = _Parser(prog="resfin", description="finite detection of free-group words")
    sub = p.add_subparsers(dest="command", required=True)

    lawgen = sub.add_parser("lawgen", help="generate law words")
    lawsub = lawgen.add_subparsers(dest="lawgen_kind", required=True)
    vn = lawsub.add_parser("vn", help="commutator law word for n")
    vn.add_argument("n", type=int)
    comm = lawsub.add_parser("commutator", help="law word from explicit exponents")
    comm.add_argument("exponents", help="comma-separated, strictly decreasing")
    powp = lawsub.add_parser("power", help="x^(n!) law word")
    powp.add_argument("n", type=int)

    det = sub.add_parser("detect", help="least detecting group in the catalog")
    det.add_argument("word")
    det.add_argument("--catalog")

    islaw = sub.add_parser("is-law", help="test a word against one group")
    islaw.add_argument("word")
    islaw.add_argument("--group", required=True, help="sl2:P, psl2:P or catalog path")
    islaw.add_argument("--id", help="catalog entry id when --group is a file")

    short = sub.add_parser("shortest-law", help="shortest rank-2 law of a group")
    short.add_argument("--group", required=True)
    short.add_argument("--id")
    short.add_argument("--max-len", type=int, required=True)

    pw = sub.add_parser("psl2-witness", help="projective witness for a word")
    pw.add_argument("word")
    pw.add_argument("--seed", type=int, default=0)

    ab = sub.add_parser("abelian-k", help="abelian detection order")
    ab.add_argument("input", help="exponent vector like 36,56,-24 or a word")

    div = sub.add_parser("divide", help="least index of a subgroup avoiding a word")
    div.add_argument("word")
    div.add_argument("--max-index", type=int)

    fold = sub.add_parser("fold", help="fold a wedge of words into a subgroup graph")
    fold.add_argument("--generators", required=True, help='semicolon-separated words, e.g. "xx;y"')
    fold.add_argument("--seed", type=int)
    fold.add_argument("--member", help="test membership of this word afterwards")

    sweep = sub.add_parser("buskin-sweep", help="divisibility bound sweep")
    sweep.add_argument("--max-len", type=int, required=True)

    cat = sub.add_parser("catalog", help="catalog maintenance")
    catsub = cat.add_subparsers(dest="catalog_action", required=True)
    catb = catsub.add_parser("build", help="enumerate and write a catalog")
    catb.add_argument("--out")
    catb.add_argument("--max-order", type=int, default=16)
    catv = catsub.add_parser("validate", help="load and revalidate a catalog")
    catv.add_argument("path")

    bvn = sub.add_parser("bench-vn", help="law word verification rows")
    bvn.add_argument("ns", nargs="?", default="1..12", help="range like 1..12 or list 2,5,9")
    bvn.add_argument("--catalog")

    bf = sub.add_parser("bench-f", help="detection growth sweep")
    bf.add_argument("--max-len", type=int, default=bench_mod.GROWTH_LENGTH_CAP)
    bf.add_argument("--catalog")
    bf.add_argument("--threads", type=int, default=1)

    return p


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except UsageError as exc:
        _note(f"usage error: {exc}")
        return EXIT_USAGE
    except (ValueError, CatalogFormatError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        _note(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE


def _dispatch(args) -> int:
    if args.command == "lawgen":
        return _cmd_lawgen(args)
    if args.command == "detect":
        return _cmd_detect(args)
    if args.command == "is-law":
        return _cmd_is_law(args)
    if args.command == "shortest-law":
        return _cmd_shortest_law(args)
    if args.command == "psl2-witness":
        return _cmd_psl2_witness(args)
    if args.command == "abelian-k":
        return _cmd_abelian_k(args)
    if args.command == "divide":
        return _cmd_divide(args)
    if args.command == "fold":
        return _cmd_fold(args)
    if args.command == "buskin-sweep":
        return _cmd_buskin_sweep(args)
    if args.command == "catalog":
        return _cmd_catalog(args)
    if args.command == "bench-vn":
        return _cmd_bench_vn(args)
    if args.command == "bench-f":
        return _cmd_bench_f(args)
    raise UsageError(f"unknown command {args.command!r}")


def _cmd_lawgen(args) -> int:
    if args.lawgen_kind == "vn":
        recipe = law_word(args.n)
        _emit(
            n=args.n,
            word=render(recipe.word),
            length=len(recipe.word.letters),
            length_bound=recipe.length_bound,
            order_bound=args.n * args.n // 9,
        )
        return EXIT_OK
    if args.lawgen_kind == "commutator":
        exponents = tuple(int(v) for v in args.exponents.split(","))
        recipe = commutator_word(exponents)
        _emit(
            exponents=args.exponents,
            word=render(recipe.word),
            length=len(recipe.word.letters),
            length_bound=recipe.length_bound,
        )
        return EXIT_OK
    if args.lawgen_kind == "power":
        if not 1 <= args.n <= POWER_LAW_MAX:
            raise UsageError(f"n must lie in 1..{POWER_LAW_MAX}")
        w = power_law(args.n)
        _emit(n=args.n, word=render(w), length=len(w.letters))
        return EXIT_OK
    raise UsageError("unknown lawgen kind")


def _cmd_detect(args) -> int:
    word = word_from_text(args.word)
    catalog = _load_catalog_arg(args)
    res = detection_order(word, catalog)
    if res.min_order is None:
        _emit(word=render(word), min_order="none", searched_to=res.searched_to)
        _note(f"not detected by any group of order <= {res.searched_to}")
        return EXIT_INCONCLUSIVE
    group = catalog.get(res.witness_id).group
    pretty = ",".join(group.element_repr(v) for v in res.witness_tuple)
    _emit(
        word=render(word),
        min_order=res.min_order,
        witness=res.witness_id,
        witness_name=res.witness_name,
        tuple=",".join(str(v) for v in res.witness_tuple),
        searched_to=res.searched_to,
    )
    _note(f"detected by {res.witness_name} via images {pretty}")
    return EXIT_OK


def _cmd_is_law(args) -> int:
    word = word_from_text(args.word)
    group = _resolve_group(args.group, args.id)
    hit = first_counterexample(group, word)
    if hit is None:
        _emit(group=group.name, word=render(word), is_law="true")
        return EXIT_OK
    _emit(
        group=group.name,
        word=render(word),
        is_law="false",
        tuple=",".join(str(v) for v in hit),
    )
    return EXIT_FALSIFIED


def _cmd_shortest_law(args) -> int:
    group = _resolve_group(args.group, args.id)
    start = time.perf_counter()
    found = shortest_law(group, args.max_len)
    elapsed = time.perf_counter() - start
    if found is None:
        _emit(
            group=group.name,
            max_len=args.max_len,
            shortest_law="none",
            elapsed=f"{elapsed:.3f}",
        )
        _note(f"no law of length <= {args.max_len}")
        return EXIT_INCONCLUSIVE
    _emit(
        group=group.name,
        max_len=args.max_len,
        shortest_law=render(found),
        length=len(found.letters),
        elapsed=f"{elapsed:.3f}",
    )
    return EXIT_OK


def _cmd_psl2_witness(args) -> int:
    word = word_from_text(args.word)
    wit = psl2_witness(word, seed=args.seed)
    images = ";".join(
        "[[{},{}],[{},{}]]".format(*m) for m in wit.images
    )
    _emit(
        word=render(word),
        prime=wit.prime,
        group_order=wit.group_order,
        k_bound=wit.detection_bound,
        images=images,
    )
    return EXIT_OK


def _cmd_abelian_k(args) -> int:
    text = args.input
    try:
        vector = tuple(int(v) for v in text.split(","))
    except ValueError:
        word = word_from_text(text)
        from .words import exponent_sums

        vector = tuple(int(v) for v in exponent_sums(word))
    k = abelian_k(vector)
    _emit(vector=",".join(str(v) for v in vector), k=k)
    return EXIT_OK


def _cmd_divide(args) -> int:
    word = word_from_text(args.word)
    d = divisibility(word, args.max_index)
    cap = args.max_index if args.max_index is not None else len(word.letters) // 2 + 2
    if d is None:
        _emit(word=render(word), divisibility="none", max_index=cap)
        return EXIT_INCONCLUSIVE
    _emit(word=render(word), divisibility=d, max_index=cap)
    return EXIT_OK


def _cmd_fold(args) -> int:
    texts = [t.strip() for t in args.generators.split(";") if t.strip()]
    if not texts:
        raise UsageError("--generators needs at least one word")
    words = [word_from_text(t) for t in texts]
    graph = SubgroupGraph.from_words(words, seed=args.seed)
    _emit(vertices=graph.num_vertices, rank=graph.rank)
    for gen in range(1, graph.rank + 1):
        for v in range(graph.num_vertices):
            w = int(graph.fwd[gen - 1, v])
            if w >= 0:
                _emit(edge=f"{v}-{gen}->{w}")
    if args.member is not None:
        member = graph.contains(word_from_text(args.member))
        _emit(member=str(member).lower())
        return EXIT_OK if member else EXIT_FALSIFIED
    return EXIT_OK


def _cmd_buskin_sweep(args) -> int:
    from .stallings import buskin_check
    from .words import reduced_letter_seqs, Word

    if args.max_len < 1:
        raise UsageError("--max-len must be positive")
    all_hold = True
    for length in range(1, args.max_len + 1):
        start = time.perf_counter()
        holds = 0
        total = 0
        for seq in reduced_letter_seqs(2, length):
            w = Word._from_reduced(np.array(seq, dtype=np.int8), 2)
            total += 1
            if buskin_check(w):
                holds += 1
        ok = holds == total
        all_hold = all_hold and ok
        _emit(
            length=length,
            words=total,
            bound_holds=holds,
            all=str(ok).lower(),
            elapsed=f"{time.perf_counter() - start:.3f}",
        )
    _emit(all_hold=str(all_hold).lower())
    return EXIT_OK if all_hold else EXIT_FALSIFIED


def _cmd_catalog(args) -> int:
    if args.catalog_action == "build":
        out = args.out or os.environ.get(DEFAULT_CATALOG_ENV, DEFAULT_CATALOG_PATH)
        start = time.perf_counter()
        catalog = build_catalog(args.max_order)
        save_catalog(catalog, out)
        _emit(
            path=out,
            max_order=catalog.max_order,
            entries=len(catalog),
            elapsed=f"{time.perf_counter() - start:.3f}",
        )
        _note(f"wrote {len(catalog)} groups to {out}")
        return EXIT_OK
    if args.catalog_action == "validate":
        try:
            catalog = load_catalog(args.path)
        except CatalogFormatError as exc:
            _emit(ok="false")
            _note(f"invalid catalog: {exc}")
            return EXIT_FALSIFIED
        _emit(ok="true", max_order=catalog.max_order, entries=len(catalog))
        return EXIT_OK
    raise UsageError("unknown catalog action")


def _cmd_bench_vn(args) -> int:
    catalog = _load_catalog_arg(args)
    ns = _parse_range(args.ns)
    rows = bench_mod.bench_law_words(catalog, ns)
    ok = True
    for row in rows:
        _emit(**row.record())
        ok = ok and row.law_ok
    return EXIT_OK if ok else EXIT_FALSIFIED


def _cmd_bench_f(args) -> int:
    catalog = _load_catalog_arg(args)
    rows = bench_mod.bench_growth(catalog, args.max_len, args.threads)
    for row in rows:
        _emit(**row.record())
    return EXIT_OK
