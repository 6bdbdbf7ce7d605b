"""Command line interface.

Three verbs: enumerate (inventories of roots, torus layers, building
sets, nested families, boundary strata), subspace (evaluate one point
description to its limit subspace), and check (self-contained exact
verifications).  All JSON output is deterministic: keys sorted, scalars
rendered as exact strings, indices 1-based.

Exit status: 0 success / all checks passed, 1 a check failed, 2 bad
usage or bad input data.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import spin, typea
from .bethe import (HolonomySpace, injectivity_pool, recover_data,
                    sample_xpoints, weyl_action_report, xpoint_from_dict)
from .field import DEFAULT_FIELD_ORDER, CyclotomicField
from .hecke import HeckeAlgebra, sample_q
from .layers import (RootAmbient, boundary_strata, enumerate_layers,
                     gamma_divisors, is_indecomposable, layer_to_dict,
                     poset_relations)
from .linalg import det, rref
from .nested import Chart, maximal_nested_sets
from .roots import WEYL_ORDERS, RootSystem, root_system

SCHEMA = 1


def _field_for(rs: RootSystem, explicit: int | None) -> CyclotomicField:
    if explicit is not None:
        return CyclotomicField(explicit)
    return CyclotomicField(12 if rs.family == "F" else DEFAULT_FIELD_ORDER)


def _emit(args, payload) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _layer_entry(amb: RootAmbient, layer) -> dict:
    entry = layer_to_dict(layer)
    entry["gamma"] = gamma_divisors(layer.roots_pos, amb.dim)
    entry["indecomposable"] = is_indecomposable(amb, layer)
    return entry


# ----------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    rs = root_system(args.type)
    field = _field_for(rs, args.field_order)
    if args.format == "dot" and args.target not in ("layers", "nested-sets"):
        print("dot output is only available for layers and nested-sets",
              file=sys.stderr)
        return 2

    if args.target == "roots":
        _emit(args, {
            "schema": SCHEMA,
            "type": rs.label,
            "rank": rs.rank,
            "cartan": [list(r) for r in rs.cartan],
            "symmetrizers": list(rs.sym),
            "positive_roots": [list(a) for a in rs.positive_roots],
            "positive_count": len(rs.positive_roots),
            "weyl_order": WEYL_ORDERS[rs.label],
        })
        return 0

    if args.target in ("layers", "building-set"):
        amb = RootAmbient.from_root_system(rs, field)
        layers = enumerate_layers(amb)
        if args.target == "building-set":
            layers = [l for l in layers if is_indecomposable(amb, l)]
        if args.format == "dot":
            _emit(args, _layers_dot(layers))
            return 0
        _emit(args, {
            "schema": SCHEMA,
            "type": rs.label,
            "field_order": field.order,
            "count": len(layers),
            "layers": [_layer_entry(amb, l) for l in layers],
        })
        return 0

    if args.target == "nested-sets":
        base = list(rs.simple_roots)
        edges = rs.nonorthogonal_edges(base)
        families = maximal_nested_sets(rs.rank, edges)
        if args.format == "dot":
            _emit(args, _nested_dot(families))
            return 0
        _emit(args, {
            "schema": SCHEMA,
            "type": rs.label,
            "vertices": rs.rank,
            "edges": [[i + 1, j + 1] for i, j in edges],
            "count": len(families),
            "families": [[[v + 1 for v in sorted(s)] for s in fam]
                         for fam in (_ordered_family(f) for f in families)],
        })
        return 0

    if args.target == "boundary-strata":
        strata = boundary_strata(rs, field)
        out = []
        for subset, layer in strata:
            amb = RootAmbient.restricted(rs, subset, field)
            entry = _layer_entry(amb, layer)
            entry["I"] = [i + 1 for i in subset]
            out.append(entry)
        _emit(args, {
            "schema": SCHEMA,
            "type": rs.label,
            "field_order": field.order,
            "count": len(out),
            "strata": out,
        })
        return 0

    print(f"unknown enumeration target {args.target!r}", file=sys.stderr)
    return 2


def _ordered_family(fam) -> list:
    return sorted(fam, key=lambda s: (len(s), tuple(sorted(s))))


def _layers_dot(layers) -> str:
    lines = ["digraph layers {", "  rankdir=BT;"]
    for i, l in enumerate(layers):
        basis = "; ".join(",".join(map(str, r)) for r in l.basis) or "torus"
        chars = ", ".join(str(v) for v in l.char_values)
        label = f"dim {l.dim}\\n{basis}"
        if chars:
            label += f"\\nchi = {chars}"
        lines.append(f'  L{i} [label="{label}"];')
    for i, j in sorted(poset_relations(layers)):
        lines.append(f"  L{i} -> L{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _nested_dot(families) -> str:
    lines = ["digraph nested {", "  rankdir=BT;"]
    for f, fam in enumerate(families):
        ordered = _ordered_family(fam)
        lines.append(f"  subgraph cluster_{f} {{")
        lines.append(f'    label="family {f + 1}";')
        for k, s in enumerate(ordered):
            text = "{" + ",".join(str(v + 1) for v in sorted(s)) + "}"
            lines.append(f'    N{f}_{k} [label="{text}"];')
        for k, s in enumerate(ordered):
            for m, t in enumerate(ordered):
                if s < t and not any(s < u < t for u in ordered):
                    lines.append(f"    N{f}_{k} -> N{f}_{m};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# subspace


def _cmd_subspace(args) -> int:
    try:
        if args.specfile == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.specfile, encoding="utf-8") as fh:
                data = json.load(fh)
        x = xpoint_from_dict(data)
    except (OSError, ValueError, KeyError) as exc:
        print(f"bad point description: {exc}", file=sys.stderr)
        return 2
    rows, _ = rref(x.subspace())
    labels = x.space.labels()
    basis = [{labels[k]: str(c) for k, c in enumerate(row) if not c == 0}
             for row in rows]
    payload = {
        "schema": SCHEMA,
        "input": x.to_dict(),
        "dimension": len(rows),
        "basis": basis,
    }
    if not x.word:
        rec = recover_data(x.space, x.subspace())
        payload["recovered"] = {
            "centralized": [list(a) for a in rec.centralized_pos],
            "units": [{"root": list(a), "value": str(v)}
                      for a, v in sorted(rec.unit_values.items())],
            "vanishing": [list(a) for a in rec.vanishing],
        }
    _emit(args, payload)
    return 0


# ----------------------------------------------------------------------
# check


def _check_commutativity(args) -> dict:
    field = CyclotomicField(DEFAULT_FIELD_ORDER)
    bad = []
    total = 0
    for n in (2, 3):
        src = typea.TrigSource(n, field)
        tgt = typea.RationalTarget(n, field)
        for s in range(args.samples):
            rng = random.Random(f"spin-check-{n}-{args.seed}-{s}")
            z = typea.sample_z(field, n, args.seed * 1009 + s)
            a, b = rng.randint(-9, 9), rng.randint(-9, 9)
            theta = [[Fraction(a), Fraction(0)], [Fraction(0), Fraction(b)]]
            hams = [spin.trig_hamiltonian(theta, z, k, n)
                    for k in range(1, n + 1)]
            for i in range(n):
                for j in range(i + 1, n):
                    total += 1
                    if not spin.commute(hams[i], hams[j]):
                        bad.append(f"n={n} s={s} [H{i + 1},H{j + 1}] != 0")
            for k in range(1, n + 1):
                total += 1
                img = typea.reindex_map(src, tgt, src.bethe(z, k))
                rep = spin.represent_pair_vector(tgt.pairs, img, theta, n)
                want = spin.mat_scale(hams[k - 1], -z[k - 1])
                if not spin.mat_equal(rep, want):
                    bad.append(f"n={n} s={s} image(k={k}) != -z_k H_k")
    return {"name": "commutativity", "passed": not bad,
            "detail": f"{total} spin identities exact" if not bad
            else "; ".join(bad[:4])}


def _check_rank(args) -> dict:
    rs = root_system(args.type)
    field = _field_for(rs, args.field_order)
    pts = sample_xpoints(rs, field, args.seed, args.samples)
    dims = [len(rref(x.subspace())[0]) for x in pts]
    bad = [d for d in dims if d != rs.rank]
    return {"name": "rank", "passed": not bad,
            "detail": f"{len(pts)} subspaces of dimension {rs.rank}"
            if not bad else f"dimensions {sorted(set(dims))}, want {rs.rank}"}


def _check_injectivity(args) -> dict:
    rs = root_system(args.type)
    field = _field_for(rs, args.field_order)
    pts = injectivity_pool(rs, field, args.seed, args.samples)
    seen: dict[tuple, int] = {}
    collisions = []
    for i, x in enumerate(pts):
        rows, _ = rref(x.subspace())
        key = tuple(tuple(str(c) for c in row) for row in rows)
        if key in seen:
            collisions.append((seen[key], i))
        else:
            seen[key] = i
    return {"name": "injectivity", "passed": not collisions,
            "detail": f"{len(pts)} points, all subspaces distinct"
            if not collisions else f"collisions at {collisions[:4]}"}


def _check_triangularity(args) -> dict:
    rs = root_system(args.type)
    base = list(rs.simple_roots)
    edges = rs.nonorthogonal_edges(base)
    families = maximal_nested_sets(rs.rank, edges)
    bad = []
    for fam in families:
        chart = Chart(base, rs.positive_roots, fam)
        m = chart.chain_matrix()
        k = len(m)
        unitriangular = all(m[i][i] == 1 for i in range(k)) and \
            all(m[i][j] == 0 for i in range(k) for j in range(i))
        d = det([[Fraction(v) for v in row] for row in m]) if k else Fraction(1)
        if not unitriangular or d != 1:
            bad.append(chart.sets)
    return {"name": "triangularity", "passed": not bad,
            "detail": f"{len(families)} chain matrices unitriangular, det 1"
            if not bad else f"{len(bad)} charts fail"}


def _check_hecke(args) -> dict:
    rs = root_system(args.type)
    alg = HeckeAlgebra(rs)
    bad = []
    for s in range(args.samples):
        q = sample_q(rs, args.seed * 733 + s)
        fam = alg.family(q)
        for i in range(rs.rank):
            for j in range(i + 1, rs.rank):
                if not alg.is_zero(alg.commutator(fam[i], fam[j])):
                    bad.append(f"s={s} [Q{i + 1},Q{j + 1}] != 0")
    control_ok = True
    if rs.rank >= 2:
        neg = HeckeAlgebra(rs, relation_sign=-1)
        q = sample_q(rs, args.seed)
        fam = neg.family(q)
        control_ok = any(
            not neg.is_zero(neg.commutator(fam[i], fam[j]))
            for i in range(rs.rank) for j in range(i + 1, rs.rank))
        if not control_ok:
            bad.append("sign-flipped exchange rule still commutes")
    return {"name": "hecke", "passed": not bad,
            "detail": f"{args.samples} weight tuples, commuting family; "
                      "sign control detects the flip"
            if not bad else "; ".join(bad[:4])}


def _check_typea(args) -> dict:
    field = CyclotomicField(DEFAULT_FIELD_ORDER)
    bad = []
    for n in (2, 3):
        src = typea.TrigSource(n, field)
        tgt = typea.RationalTarget(n, field)
        for s in range(args.samples):
            z = typea.sample_z(field, n, args.seed * 577 + s)
            for k in range(1, n + 1):
                if not typea.image_matches_scaled_gaudin(src, tgt, z, k):
                    bad.append(f"n={n} s={s} k={k} scaled identity")
            if not typea.spans_match(src, tgt, z):
                bad.append(f"n={n} s={s} span equality")
    return {"name": "typea", "passed": not bad,
            "detail": "images equal scaled rational elements; spans equal"
            if not bad else "; ".join(bad[:4])}


_CHECKS = {
    "commutativity": _check_commutativity,
    "rank": _check_rank,
    "injectivity": _check_injectivity,
    "triangularity": _check_triangularity,
    "hecke": _check_hecke,
    "typea": _check_typea,
}


def _cmd_check(args) -> int:
    rs = root_system(args.type)
    field = _field_for(rs, args.field_order)
    names = list(_CHECKS) if args.what == "all" else [args.what]
    action = weyl_action_report(rs, field, args.seed)
    results = [_CHECKS[name](args) for name in names]
    payload = {
        "schema": SCHEMA,
        "type": rs.label,
        "field_order": field.order,
        "seed": args.seed,
        "samples": args.samples,
        "w_action": action,
        "checks": results,
        "passed": all(r["passed"] for r in results),
    }
    _emit(args, payload)
    return 0 if payload["passed"] else 1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigbethe",
        description="Exact commuting families on root-system holonomy "
                    "algebras and their limit subspaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", default="A2",
                       help="root system label, e.g. A2, B3, G2 (default A2)")
        p.add_argument("--field-order", type=int, default=None,
                       help="cyclotomic field order (default 6; 12 for F4)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=6)
        p.add_argument("--out", default=None, help="write output to a file")

    p_enum = sub.add_parser("enumerate", help="inventories as JSON or DOT")
    p_enum.add_argument("target", choices=[
        "roots", "layers", "building-set", "nested-sets", "boundary-strata"])
    common(p_enum)
    p_enum.add_argument("--format", choices=["json", "dot"], default="json")

    p_sub = sub.add_parser("subspace",
                           help="limit subspace of one point description")
    p_sub.add_argument("specfile", help="JSON file ('-' for stdin)")
    common(p_sub)

    p_check = sub.add_parser("check", help="exact structural verifications")
    p_check.add_argument("what", choices=[*_CHECKS, "all"], type=str.lower)
    common(p_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "subspace":
            return _cmd_subspace(args)
        return _cmd_check(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
