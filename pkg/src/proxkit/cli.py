"""Command-line workbench: ``proxkit VERB ...``.

Exit status is 0 when every check passes, 1 when some check fails (the
report lists witnesses) and 2 when the input cannot be used at all.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import formats, relspace
from .dot import gleason_dot, poset_dot
from .errors import (AxiomError, CycleError, IsoFailure, NoBounds, NotALattice, NotDistributive, ParseError,
                     ProxkitError, SizeError)
from .gleason import (GleasonSpace, check_gleason_axioms, quotient, relation_from_subordination,
                      sigma_check)
from .morphism import (HemiMorphism, check_conditions, check_dvc, check_h, check_ofc, ends_map,
                       relation_from_hemimorphism, xi_map)
from .order import Lattice, bits_of, close_order, lattice_from_poset
from .report import Report
from .subordination import (AXIOMS, SUBORDINATION_AXIOMS, Subordination, check_axiom, ends,
                            subordination_closure)
from .theorems import CHECKS, run_check

MAX_GENERATED_POSET = 8


class UsageError(Exception):
    """Bad command-line input; maps to exit status 2."""


# ---------------------------------------------------------------- helpers

def _witness(names, w):
    return None if w is None else tuple(names[i] for i in w)


def _set(names, mask: int) -> str:
    return "{" + ",".join(names[i] for i in bits_of(mask)) + "}"


def _pairs(names, pairs, other=None) -> list[str]:
    other = other or names
    return [f"{names[a]}<{other[b]}" for a, b in pairs]


def _axiom_list(text: str | None, default) -> tuple[str, ...]:
    if text is None:
        return tuple(default)
    out = tuple(t.strip().upper() for t in text.split(",") if t.strip())
    bad = [a for a in out if a not in AXIOMS]
    if bad:
        raise UsageError(f"unknown axiom(s) {', '.join(bad)}; choose from {','.join(AXIOMS)}")
    return out


def _lattice(ref) -> Lattice:
    return formats.parse_lattice(ref)


def _relation(L: Lattice, token: str | None) -> tuple[Subordination, str]:
    """Resolve a relation token: ``leq``, ``min`` (least subordination), JSON pairs, or a file."""
    if token is None or token == "leq":
        return formats.relation_on(L, "leq"), "leq"
    if token == "min":
        return subordination_closure(L), "min"
    if token.lstrip().startswith("["):
        raw = formats.parse_text('{"kind": "relation", "pairs": ' + token + "}", "<argument>")
        return formats.relation_on(L, raw["pairs"]), token
    doc = formats.load(token)
    if doc["kind"] != "relation":
        raise ParseError(f"{token}: expected a relation, got a {doc['kind']}")
    return formats.relation_on(L, doc.get("pairs", "leq")), doc.get("name", token)


def _axiom_checks(rep: Report, s: Subordination, axioms) -> None:
    names = s.lattice.names
    for ax in axioms:
        res = check_axiom(s, ax)
        rep.check(ax, res.passed, _witness(names, res.witness))


# ---------------------------------------------------------------- validate

def _validate_structure(rep: Report, doc: dict, want_lattice: bool):
    """Order and lattice checks; returns the parsed lattice (or poset) or None."""
    labels = formats._labels(doc)
    pairs = formats._pairs(doc.get("leq", []), labels)
    try:
        P = close_order(pairs, len(labels), labels)
    except CycleError as exc:
        rep.check("partial-order", False, _witness(labels, exc.pair))
        return None
    rep.check("partial-order", True)
    rep.add("elements", list(P.names))
    rep.add("covers", _pairs(P.names, P.covers))
    if not want_lattice:
        return P
    try:
        L = lattice_from_poset(P)
    except NoBounds as exc:
        rep.check("bounded", False, note=str(exc))
        return None
    except NotALattice as exc:
        rep.check("bounded", True)
        rep.check("lattice", False, (exc.op,) + _witness(labels, exc.pair))
        return None
    except NotDistributive as exc:
        rep.check("bounded", True)
        rep.check("lattice", True)
        rep.check("distributive", False, _witness(labels, exc.triple))
        return None
    rep.check("bounded", True)
    rep.check("lattice", True)
    rep.check("distributive", True)
    return L


def cmd_validate(args, rep: Report) -> None:
    doc = formats.load(args.file)
    kind = doc["kind"]
    rep.add("kind", kind)
    if kind == "poset":
        _validate_structure(rep, doc, want_lattice=False)
    elif kind == "lattice":
        L = _validate_structure(rep, doc, want_lattice=True)
        if L is not None and (args.relation is not None or args.axioms is not None):
            s, label = _relation(L, args.relation)
            rep.add("relation", label)
            rep.add("pairs", _pairs(L.names, s.pairs))
            _axiom_checks(rep, s, _axiom_list(args.axioms, AXIOMS))
    elif kind == "relation":
        s = formats.parse_relation(doc)
        rep.add("pairs", _pairs(s.lattice.names, s.pairs))
        _axiom_checks(rep, s, _axiom_list(args.axioms, AXIOMS))
    elif kind == "gleason":
        G = formats.parse_gleason(doc)
        rep.add("points", list(G.poset.names))
        rep.add("R", _pairs(G.poset.names, G.pairs))
        for name, res in check_gleason_axioms(G).items():
            rep.check(f"item{name}", res.passed, _witness(G.poset.names, res.witness))
    elif kind == "morphism":
        _morphism_report(rep, formats.parse_morphism(doc))


# ---------------------------------------------------------------- dualize

def _gleason_entries(rep: Report, G: GleasonSpace) -> None:
    names = G.poset.names
    rep.add("points", list(names))
    rep.add("point-order", _pairs(names, G.poset.covers))
    rep.add("R", _pairs(names, G.pairs))
    for name, res in check_gleason_axioms(G).items():
        shown = "pass" if res.passed else f"fail {_witness(names, res.witness)}"
        rep.add(f"gleason.item{name}", shown)


def cmd_dualize(args, rep: Report) -> None:
    L = _lattice(args.lattice)
    s, label = _relation(L, args.relation)
    rep.add("lattice", list(L.names))
    rep.add("relation", label)
    missing = [ax for ax in SUBORDINATION_AXIOMS if not s.axiom_flags[ax].passed]
    if missing:
        ax = missing[0]
        rep.check("subordination", False, (ax,) + _witness(L.names, s.axiom_flags[ax].witness))
        return
    rep.check("subordination", True)
    G = relation_from_subordination(s)
    _gleason_entries(rep, G)
    if G.is_preorder:
        Q = quotient(G)
        rep.add("classes", [_set(G.poset.names, c.bits) for c in Q.classes])
        rep.add("class-order", _pairs(Q.order.names, Q.order.covers))
    else:
        rep.add("classes", "skipped: R is not a pre-order")
    if s.is_proximity:
        E = ends(s)
        rep.add("ends", [_set(L.names, p.bits) for p in E])
        try:
            report = sigma_check(G, s)
        except IsoFailure as exc:
            rep.check("sigma", False, note=str(exc))
            return
        rep.check("sigma", True)
        rep.add("sigma", [f"{Q.order.names[k]}->{_set(L.names, E[e].bits)}"
                          for k, e in enumerate(report.sigma)])
    else:
        failing = [ax for ax in AXIOMS if not s.axiom_flags[ax].passed]
        rep.add("sigma", f"skipped: not a proximity frame ({','.join(failing)} fail)")
    if args.out:
        _write(args.out, formats.dumps(formats.gleason_doc(G)))
        rep.add("written", args.out)


# ---------------------------------------------------------------- morphism

def _morphism_report(rep: Report, h: HemiMorphism) -> None:
    L, M = h.source.lattice, h.target.lattice
    rep.add("source", list(L.names))
    rep.add("target", list(M.names))
    rep.add("map", [f"{L.names[a]}->{M.names[b]}" for a, b in enumerate(h.table)])
    flags = {ax: check_h(h, ax) for ax in ("H0", "H1", "H2")}
    for ax, res in flags.items():
        rep.check(ax, res.passed, _witness(L.names, res.witness))
    if not flags["H0"].passed:
        rep.add("rho", "skipped: H0 fails")
        return
    if not (h.source.is_subordination and h.target.is_subordination):
        rep.add("rho", "skipped: a relation is not a subordination")
        return
    rho = relation_from_hemimorphism(h)
    X, Y = rho.source, rho.target
    rep.add("rho", _pairs(Y.poset.names, rho.pairs, X.poset.names))
    for name, res in check_conditions(rho).items():
        rep.check(f"condition{name}", res.passed, _witness(X.poset.names, res.witness))
    if not (X.is_preorder and Y.is_preorder):
        rep.add("ofc", "skipped: R is not a pre-order")
        return
    ofc = check_ofc(rho)
    w = None if ofc.passed else (_witness(Y.poset.names, ofc.witness[:2])
                                 + _witness(X.poset.names, ofc.witness[2:]))
    rep.check("ofc", ofc.passed, w)
    dvc = check_dvc(rho)
    rep.check("dvc", dvc.passed, None if dvc.passed else _set(X.poset.names, sum(1 << i for i in dvc.witness)))
    rep.check("H1-iff-ofc", flags["H1"].passed == ofc.passed)
    rep.check("H2-iff-dvc", flags["H2"].passed == dvc.passed)
    if h.is_proximity_morphism and h.source.is_proximity and h.target.is_proximity:
        em = ends_map(h)
        rep.add("End(h)", [f"{_set(M.names, em.domain[i].bits)}->{_set(L.names, em.codomain[j].bits)}"
                           for i, j in enumerate(em.table)])
        xi = xi_map(rho)
        rep.add("xi", [f"{xi.domain.order.names[i]}->{xi.codomain.order.names[j]}"
                       for i, j in enumerate(xi.table)])
    else:
        rep.add("xi", "skipped: not a morphism of proximity frames")


def cmd_morphism(args, rep: Report) -> None:
    if len(args.items) == 1:
        doc = formats.load(args.items[0])
        if doc["kind"] != "morphism":
            raise ParseError(f"{args.items[0]}: expected a morphism, got a {doc['kind']}")
        h = formats.parse_morphism(doc)
    elif len(args.items) == 3:
        L, M = _lattice(args.items[0]), _lattice(args.items[1])
        s, _ = _relation(L, args.src_relation)
        t, _ = _relation(M, args.tgt_relation)
        h = HemiMorphism(s, t, formats.parse_morphism_table(args.items[2], L, M))
    else:
        raise UsageError("morphism takes FILE or SOURCE TARGET MAP")
    _morphism_report(rep, h)


# ---------------------------------------------------------------- exhaust

def cmd_exhaust(args, rep: Report) -> None:
    L = _lattice(args.lattice)
    rep.add("lattice", list(L.names))
    if args.check:
        res = run_check(L, args.check, workers=args.workers, sample=args.sample, seed=args.seed)
        rep.add("scanned", res.scanned)
        rep.add("survivors", res.survivors)
        for key, value in res.detail.items():
            rep.add(key, value)
        bad = None if res.passed else _pairs(L.names, res.counterexample.pairs)
        rep.check(args.check, res.passed, bad)
        return
    axioms = _axiom_list(args.axioms, SUBORDINATION_AXIOMS)
    rep.add("axioms", ",".join(axioms))
    if args.sample is None:
        if L.size > relspace.EXHAUSTIVE_LIMIT:
            raise SizeError(f"|L| = {L.size} exceeds {relspace.EXHAUSTIVE_LIMIT}; pass --sample N")
        codes = relspace.scan(L, axioms, workers=args.workers)
        scanned = relspace.relation_count(L)
        found = [Subordination.from_code(L, c) for c in codes]
    else:
        from .theorems import relations_satisfying
        scanned, found = relations_satisfying(L, axioms, sample=args.sample, seed=args.seed)
    rep.add("scanned", scanned)
    rep.add("survivors", len(found))
    for k, s in enumerate(found):
        rep.add(f"relation.{k}", _pairs(L.names, s.pairs))


# ---------------------------------------------------------------- generate

def random_poset_doc(n: int, seed: int) -> dict:
    if not 0 <= n <= MAX_GENERATED_POSET:
        raise SizeError(f"--poset takes 0..{MAX_GENERATED_POSET} points, got {n}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    P = close_order(pairs, n, [f"p{i}" for i in range(n)])
    return formats.poset_doc(P)


def random_subordination(L: Lattice, seed: int) -> Subordination:
    rng = random.Random(seed)
    comparable = [(a, b) for a in range(L.size) for b in range(L.size) if L.le(a, b)]
    picks = rng.sample(comparable, k=rng.randint(0, len(comparable)))
    return subordination_closure(L, sorted(picks))


def cmd_generate(args, rep: Report) -> None:
    if (args.poset is None) == (args.subordination is None):
        raise UsageError("generate needs exactly one of --poset N or --subordination LATTICE")
    if args.poset is not None:
        doc = random_poset_doc(args.poset, args.seed)
    else:
        L = _lattice(args.subordination)
        s = random_subordination(L, args.seed)
        doc = formats.relation_doc(s, args.subordination)
        _axiom_checks(rep, s, SUBORDINATION_AXIOMS)
    text = formats.dumps(doc)
    if args.out:
        _write(args.out, text)
        rep.add("written", args.out)
    else:
        rep.add("instance", json.dumps(doc, ensure_ascii=False))


# ---------------------------------------------------------------- dot

def dot_text(ref, relation: str | None = None) -> str:
    doc = formats.load(ref)
    kind = doc["kind"]
    name = doc.get("name", "G")
    if kind == "gleason":
        return gleason_dot(formats.parse_gleason(doc), name)
    if kind == "poset":
        return poset_dot(formats.parse_poset(doc), name)
    if kind == "lattice":
        if relation is None:
            return poset_dot(formats.parse_lattice(doc).poset, name)
        s, _ = _relation(formats.parse_lattice(doc), relation)
        return gleason_dot(relation_from_subordination(s), name)
    raise ParseError(f"cannot draw a {kind}")


# ---------------------------------------------------------------- driver

def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--timing", action="store_true", help="include elapsed time in the report")

    p = argparse.ArgumentParser(prog="proxkit", description="Finite proximity-frame workbench.")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", parents=[common], help="check a lattice, poset, relation, morphism or Gleason file")
    v.add_argument("file")
    v.add_argument("--relation", help="leq, min, JSON pairs, or a relation file")
    v.add_argument("--axioms", help="comma-separated subset of S1,S2,S3,S4,S5,S6,S8")

    d = sub.add_parser("dualize", parents=[common], help="compute the dual Gleason space and ends")
    d.add_argument("lattice")
    d.add_argument("relation", nargs="?", default=None)
    d.add_argument("--out", help="write the Gleason space to FILE")

    m = sub.add_parser("morphism", parents=[common], help="diagnose a map between lattices")
    m.add_argument("items", nargs="+", metavar="FILE | SOURCE TARGET MAP")
    m.add_argument("--src-relation")
    m.add_argument("--tgt-relation")

    e = sub.add_parser("exhaust", parents=[common], help="enumerate relations or verify a theorem")
    e.add_argument("lattice")
    e.add_argument("--axioms")
    e.add_argument("--check", choices=CHECKS)
    e.add_argument("--sample", type=int)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--workers", type=int, default=1)

    g = sub.add_parser("generate", parents=[common], help="random poset or subordination")
    g.add_argument("--poset", type=int)
    g.add_argument("--subordination")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")

    t = sub.add_parser("dot", parents=[common], help="Graphviz rendering")
    t.add_argument("file")
    t.add_argument("--relation")
    t.add_argument("--out")
    return p


def _echo(args) -> str:
    """Command line minus presentation flags, so reports compare across --workers/--json."""
    parts = [args.verb]
    skip = {"verb", "json", "timing", "workers", "out"}
    for key, value in vars(args).items():
        if key in skip or value is None:
            continue
        if isinstance(value, list):
            parts.extend(value)
        elif key in ("file", "lattice", "relation") and not isinstance(value, bool):
            parts.append(str(value))
        else:
            parts.append(f"--{key.replace('_', '-')} {value}")
    return " ".join(parts)


COMMANDS = {"validate": cmd_validate, "dualize": cmd_dualize, "morphism": cmd_morphism,
            "exhaust": cmd_exhaust, "generate": cmd_generate}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.verb == "dot":
        try:
            text = dot_text(args.file, args.relation)
        except (ProxkitError, OSError, IndexError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if args.out:
            _write(args.out, text)
        else:
            sys.stdout.write(text)
        return 0
    rep = Report(_echo(args))
    start = time.perf_counter()
    try:
        COMMANDS[args.verb](args, rep)
    except AxiomError as exc:
        rep.check("axioms", False, note=str(exc))
    except (ProxkitError, OSError, IndexError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        rep.add("elapsed", f"{time.perf_counter() - start:.3f}s")
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
