"""Command-line front end.

Every subcommand prints ``key=value`` lines in a fixed order, or a single
JSON object with ``--json``.  Exit status: 0 success, 1 bad input or an
unsupported request, 2 when a verdict is UNKNOWN at the given bound.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import algebra as alg
from . import circles as cir
from . import cyclic as cyc
from . import sbfinite as sb
from .errors import BrauerKitError, InternalError, SizeLimitExceeded, UnsupportedError, ValidationError
from .fields import (extension_name, finite_field, hilbert90_witness, norm, norm_membership,
                     parse_element, parse_extension, parse_field, short_name, trace)

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2


class Report:
    """Collects text lines and a JSON object; the status follows the verdicts seen."""

    def __init__(self):
        self.lines = []
        self.data = {}
        self.status = EXIT_OK

    def line(self, text, detail=False):
        self.lines.append((text, detail))

    def put(self, **kw):
        self.data.update(kw)

    def verdict(self, v):
        if v.is_unknown:
            self.status = max(self.status, EXIT_UNKNOWN)

    def emit(self, args, out):
        if args.json:
            out.write(json.dumps(self.data, sort_keys=True, ensure_ascii=False) + "\n")
            return
        for text, detail in self.lines:
            if not (detail and args.quiet):
                out.write(text + "\n")


# -- literal helpers ----------------------------------------------------------

def split_top(text, sep=","):
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p != ""]


def lit(F, x):
    """Element from a CLI/JSON literal: strings are parsed, ints read as integers."""
    if isinstance(x, str):
        return parse_element(F, x)
    if isinstance(x, bool):
        raise ValidationError(f"bad element literal {x!r}")
    if isinstance(x, int):
        return F.from_int(x)
    return F.from_json(x)


def lits(F, text):
    if isinstance(text, list):
        return [lit(F, x) for x in text]
    return [lit(F, x) for x in split_top(text)]


def ext_arg(args):
    if getattr(args, "ext", None):
        return parse_extension(args.ext)
    if getattr(args, "K", None) and getattr(args, "k", None):
        return parse_extension(f"{args.K}/{args.k}")
    raise ValidationError("need --ext, or both --K and --k")


def verdict_json(v, enc=None):
    payload = v.payload
    if enc is not None and payload is not None:
        payload = enc(payload)
    return {"outcome": v.outcome.value, "kind": v.kind, "bound": v.bound, "payload": payload}


def verdict_text(name, v):
    if v.is_unknown:
        return f"{name}=unknown (bound {v.bound})"
    return f"{name}={v.outcome.value} ({v.kind})"


def _load_json_arg(text):
    if text.lstrip().startswith(("{", "[")):
        return json.loads(text)
    with open(text, encoding="utf-8") as fh:
        return json.load(fh)


def load_algebra(spec):
    """Algebra from ``M<n>(F)``, ``(a,b)_F`` (quaternions), ``(K/k,a)`` (cyclic),
    inline JSON, a JSON file, or an already parsed literal."""
    if isinstance(spec, dict):
        return alg.StructureConstantAlgebra.from_json(spec)
    s = spec.strip()
    if s.startswith("{"):
        return alg.StructureConstantAlgebra.from_json(json.loads(s))
    if s.startswith("M") and "(" in s and s.endswith(")") and s[1:s.index("(")].isdigit():
        return alg.matrix_algebra(parse_field(s[s.index("(") + 1:-1]), int(s[1:s.index("(")]))
    if s.startswith("(") and ")_" in s:
        inner, fname = s[1:].rsplit(")_", 1)
        F = parse_field(fname)
        parts = split_top(inner)
        if len(parts) != 2:
            raise ValidationError(f"quaternion literal needs two parameters: {spec!r}")
        return alg.quaternion_algebra(F, *(lit(F, p) for p in parts))
    if s.startswith("(") and s.endswith(")"):
        return cyc.build_cyclic_algebra(*class_from_text(s))
    if os.path.exists(s):
        return alg.StructureConstantAlgebra.from_json(_load_json_arg(s))
    raise ValidationError(f"cannot read algebra {spec!r}")


def class_from_text(s):
    parts = split_top(s.strip()[1:-1])
    if len(parts) != 2:
        raise ValidationError(f"class literal must look like (K/k,a): {s!r}")
    K = parse_extension(parts[0])
    return K, lit(K.base, parts[1])


def cyclic_class(args):
    K = ext_arg(args)
    return cyc.CyclicBrauerClass(K, lit(K.base, args.a))


def algebra_summary(A, rep, prefix=""):
    Z = alg.center(A)
    try:
        R = alg.radical(A)
        rad = R.dim
    except UnsupportedError as e:
        rad = None
        rep.line(f"{prefix}radical=unsupported ({e})")
    cs = Z.dim == 1 and rad == 0
    info = {"field": short_name(A.field), "dim": A.dim, "center": Z.dim, "radical": rad,
            "central_simple": cs}
    rep.line(f"{prefix}dim={A.dim} field={short_name(A.field)}")
    rep.line(f"{prefix}center={Z.dim}" + ("" if rad is None else f" radical={rad}"))
    line = f"{prefix}central_simple={'yes' if cs else 'no'}"
    if cs:
        info["degree"] = alg.degree(A)
        line += f" degree={info['degree']}"
    rep.line(line)
    return info


def _elt_json(F):
    return lambda v: [F.to_json(c) for c in v]


# -- field --------------------------------------------------------------------

def cmd_field_norm(args, rep):
    K = ext_arg(args)
    x = lit(K, args.x)
    n, t = norm(K, x), trace(K, x)
    rep.line(f"norm={K.base.format(n)}")
    rep.line(f"trace={K.base.format(t)}", detail=True)
    rep.put(ext=extension_name(K), x=K.to_json(x), norm=K.base.to_json(n), trace=K.base.to_json(t))


def cmd_field_membership(args, rep):
    K = ext_arg(args)
    a = lit(K.base, args.a)
    v = norm_membership(K, a, args.bound)
    rep.verdict(v)
    text = verdict_text("membership", v)
    if v.is_proved:
        text += f" witness={K.format(v.payload)}"
    rep.line(text)
    rep.put(ext=extension_name(K), a=K.base.to_json(a),
            membership=verdict_json(v, K.to_json if v.is_proved else _jsonable))


def cmd_field_hilbert90(args, rep):
    K = ext_arg(args)
    lam = lit(K, args.lam)
    nl = norm(K, lam)
    if nl != K.base.one:
        raise ValidationError(f"norm({K.format(lam)}) = {K.base.format(nl)} is not 1")
    f = hilbert90_witness(K, lam)
    rep.line(f"witness={K.format(f)}")
    rep.line(f"check: {K.format(lam)} = ({K.format(f)})/sigma({K.format(f)})", detail=True)
    rep.put(ext=extension_name(K), **{"lambda": K.to_json(lam)}, witness=K.to_json(f))


# -- algebra ------------------------------------------------------------------

def cmd_algebra_check(args, rep):
    A = load_algebra(args.algebra[0])
    rep.line("associative=yes unit=yes")
    info = algebra_summary(A, rep)
    rep.put(algebra=info)


def _algebra_out(A, rep, key):
    info = algebra_summary(A, rep)
    rep.put(**{key: A.to_json(), "summary": info})


def cmd_algebra_tensor(args, rep):
    if len(args.algebra) != 2:
        raise ValidationError("tensor needs exactly two --algebra arguments")
    A, B = (load_algebra(s) for s in args.algebra)
    _algebra_out(alg.tensor_product(A, B), rep, "tensor")


def cmd_algebra_opp(args, rep):
    A = load_algebra(args.algebra[0])
    _algebra_out(alg.opposite(A), rep, "opposite")


def cmd_algebra_zerodivisor(args, rep):
    A = load_algebra(args.algebra[0])
    v = alg.find_zero_divisor(A, args.bound)
    rep.verdict(v)
    rep.line(verdict_text("zerodivisor", v))
    if v.is_proved:
        rep.line(f"x={A.format(v.payload['x'])}")
        rep.line(f"y={A.format(v.payload['y'])}")
    rep.put(zerodivisor=verdict_json(v, _elt_pair(A.field) if v.is_proved else _jsonable))


def cmd_algebra_ideals(args, rep):
    A = load_algebra(args.algebra[0])
    right = sorted(alg.right_ideal_dimensions(A))
    left = sorted(alg.right_ideal_dimensions(alg.opposite(A)))
    rep.line("right=" + ",".join(map(str, right)))
    rep.line("left=" + ",".join(map(str, left)) + " (right ideals of the opposite algebra)")
    rep.put(right=right, left=left)


# -- cyclic -------------------------------------------------------------------

def cmd_cyclic_build(args, rep):
    c = cyclic_class(args)
    A = c.algebra()
    rep.line(f"algebra={c.format()} dim={A.dim}")
    rep.line("basis=" + ",".join(A.names), detail=True)
    rep.put(**{"class": _class_json(c)}, algebra=A.to_json())


def _class_json(c):
    return {"ext": extension_name(c.ext), "a": c.ext.base.to_json(c.a)}


def cmd_cyclic_split(args, rep):
    c = cyclic_class(args)
    v = cyc.is_split(c, args.bound)
    rep.verdict(v)
    rep.line(verdict_text("split", v))
    K, k = c.ext, c.ext.base
    if v.is_proved:
        rep.line(f"norm_witness={K.format(v.payload['norm_witness'])}")
        zd = v.payload.get("zero_divisor")
        if zd:
            A = c.algebra()
            rep.line(f"x={A.format(zd['x'])}", detail=True)
            rep.line(f"y={A.format(zd['y'])}", detail=True)

        def enc(p):
            out = {"norm_witness": K.to_json(p["norm_witness"])}
            if p.get("zero_divisor"):
                out["zero_divisor"] = {s: _elt_json(k)(p["zero_divisor"][s]) for s in "xy"}
            return out
    else:
        enc = _jsonable
    rep.put(**{"class": _class_json(c)}, split=verdict_json(v, enc))


def _period_text(v, m):
    if v.is_proved:
        return f"period={v.payload} (proved: {v.kind})"
    lo, hi = v.payload["lower"], v.payload["upper"]
    return f"period≥{lo} (unknown: divides {hi}, bound {v.bound})"


def cmd_cyclic_period(args, rep):
    c = cyclic_class(args)
    v = cyc.period(c, args.bound)
    rep.verdict(v)
    rep.line(_period_text(v, c.degree))
    rep.put(**{"class": _class_json(c)}, period=verdict_json(v))


def cmd_cyclic_index(args, rep):
    c = cyclic_class(args)
    b = cyc.index_bounds(c, args.bound)
    rep.verdict(b.period)
    if b.decisive:
        rep.line(f"index={b.lower} (proved: bounds {b.lower}..{b.upper})")
    else:
        rep.status = max(rep.status, EXIT_UNKNOWN)
        rep.line(f"index≥{b.lower} (unknown: divides {b.upper}, bound {args.bound})")
    rep.line(_period_text(b.period, c.degree), detail=True)
    rep.put(**{"class": _class_json(c)}, index={"lower": b.lower, "upper": b.upper},
            period=verdict_json(b.period))


def cmd_cyclic_decompose(args, rep):
    c = cyclic_class(args)
    parts = cyc.primary_decomposition(c, args.bound)
    out = []
    for p in parts:
        v = cyc.period(p, args.bound)
        rep.line(f"part={p.format()} {_period_text(v, p.degree)}")
        out.append({"class": _class_json(p), "period": verdict_json(v)})
    rep.put(**{"class": _class_json(c)}, parts=out)


def cmd_cyclic_nrd(args, rep):
    c = cyclic_class(args)
    form = cyc.reduced_norm(c.ext, c.a)
    names = cyc.basis_names(c.ext)
    rep.line(f"nrd={form.format()}")
    rep.line("coordinates: " + ", ".join(f"x{i}={nm}" for i, nm in enumerate(names)), detail=True)
    rep.put(**{"class": _class_json(c)}, nrd=form.to_json(), basis=names)


# -- sb -----------------------------------------------------------------------

def _points_json(F, pts):
    return [[F.to_json(c) for c in p.coords] for p in pts]


def cmd_sb_points(args, rep):
    F = finite_field(args.q)
    pts = sb.projective_points(args.n, F)
    rep.line(f"count={len(pts)}")
    if args.list:
        for p in pts:
            rep.line(p.format(F), detail=True)
    rep.put(n=args.n, q=args.q, count=len(pts), **({"points": _points_json(F, pts)} if args.list else {}))


def cmd_sb_zeros(args, rep):
    F = finite_field(args.q)
    rows = _load_json_arg(args.matrix)
    M = [[lit(F, c) for c in row] for row in rows]
    S = sb.TangentSection(F, M)
    locus = sb.section_zero_locus(S)
    if isinstance(locus, sb.ScalarSection):
        rep.line("count=all (scalar matrix: the section vanishes identically)")
        rep.put(q=args.q, scalar=True, count=len(sb.projective_points(S.n, F)))
        return
    rep.line(f"count={len(locus)}")
    for p in locus:
        rep.line(p.format(F), detail=True)
    rep.put(q=args.q, scalar=False, count=len(locus), points=_points_json(F, locus))


def cmd_sb_dictionary(args, rep):
    F = finite_field(args.q)
    D = sb.ideal_point_dictionary(args.n, F)
    rep.line(f"points={len(D.points)} right_ideals={len(D.right_ideals)} left_ideals={len(D.left_ideals)} "
             f"bijective={'yes' if D.bijective else 'no'}")
    rep.line(f"method={D.method}", detail=True)
    if args.list:
        for (p, I), (_, J) in zip(D.right_ideals, D.left_ideals):
            rep.line(f"{p.format(F)} right_dim={I.dim} left_dim={J.dim}", detail=True)
    rep.put(n=args.n, q=args.q, points=len(D.points), right_ideals=len(D.right_ideals),
            left_ideals=len(D.left_ideals), bijective=D.bijective, method=D.method)


# -- circle -------------------------------------------------------------------

def _split_bundle(args):
    K = ext_arg(args)
    lams = lits(K, args.lam)
    return K, cir.SplitLineBundle(cir.SplitCircle(len(lams), K), lams)


def cmd_circle_class(args, rep):
    K, L = _split_bundle(args)
    c1 = cir.c1_split(L).invariant
    if not K.in_base(c1):
        raise ValidationError(f"c1 = {K.format(c1)} does not lie in {short_name(K.base)}; "
                              "the pushforward is not geometrically split")
    c = cir.class_of_circle_bundle(L)
    v = cyc.is_split(c, args.bound)
    rep.verdict(v)
    split = "unknown" if v.is_unknown else v.outcome.value
    rep.line(f"c1={K.base.format(c.a)} class={c.format()} split={split}")
    rep.put(c1=K.base.to_json(c.a), **{"class": _class_json(c)},
            split=verdict_json(v, (lambda p: {"norm_witness": K.to_json(p["norm_witness"])})
                               if v.is_proved else _jsonable))


def _matrix_text(K, M):
    return "[" + "; ".join(", ".join(K.format(c) for c in row) for row in M) + "]"


def cmd_circle_push(args, rep):
    K, L = _split_bundle(args)
    P = cir.pushforward(L)
    rep.line(f"rank={P.bundle.rank} product={K.format(P.product)} "
             f"geometrically_split={'yes' if P.geometrically_split else 'no'}")
    rep.line(f"gluing={_matrix_text(K, P.bundle.matrix)}", detail=True)
    summ = sorted(P.summands.items(), key=lambda kv: K.format(kv[0]))
    for val, mult in summ:
        rep.line(f"summand c1={K.format(val)} multiplicity={mult}", detail=True)
    rep.put(rank=P.bundle.rank, product=K.to_json(P.product), geometrically_split=P.geometrically_split,
            gluing=[[K.to_json(c) for c in row] for row in P.bundle.matrix],
            summands=[{"c1": K.to_json(v), "multiplicity": m} for v, m in summ])


def cmd_circle_pull(args, rep):
    K = ext_arg(args)
    L = cir.GaloisLineBundle(cir.GaloisCircle(K), lit(K, args.lambda1))
    g = cir.galois_class(L)
    P = cir.pullback(L)
    c1 = cir.c1_split(P)
    if c1.invariant != K.embed(g.invariant):
        raise InternalError("galois class differs from c1 of the pullback")
    rep.line(f"lambdas={','.join(K.format(x) for x in P.lambdas)} c1={K.format(c1.invariant)} "
             f"galois_class={K.base.format(g.invariant)} trivial={'yes' if g.trivial else 'no'}")
    if g.trivial:
        rep.line(f"witness={K.format(g.witness)}", detail=True)
    rep.put(lambdas=[K.to_json(x) for x in P.lambdas], c1=K.to_json(c1.invariant),
            galois_class=K.base.to_json(g.invariant), trivial=g.trivial,
            witness=K.to_json(g.witness) if g.trivial else None)


def cmd_circle_end(args, rep):
    K, L = _split_bundle(args)
    P = cir.pushforward(L)
    E = cir.global_end_algebra(P.bundle)
    info = algebra_summary(E, rep)
    data = {"end": info, "geometrically_split": P.geometrically_split}
    if P.geometrically_split:
        c = cir.class_of_circle_bundle(L)
        v = alg.find_zero_divisor(E, args.bound)
        rep.verdict(v)
        rep.line(f"class={c.format()} " + verdict_text("zerodivisor", v))
        data["class"] = _class_json(c)
        data["zerodivisor"] = verdict_json(v, _elt_pair(E.field) if v.is_proved else _jsonable)
    rep.put(**data)


def _elt_pair(F):
    return lambda p: {"x": _elt_json(F)(p["x"]), "y": _elt_json(F)(p["y"])}


def _divisor(F, text):
    if isinstance(text, list):
        return [[lit(F, x) for x in comp] for comp in text]
    return [lits(F, comp) for comp in text.split(";")]


def cmd_circle_abel(args, rep):
    if args.ext or (args.K and args.k):
        K = ext_arg(args)
        circle = cir.GaloisCircle(K)
        zs, ps = lits(K, args.zeros), lits(K, args.poles)
        inv = cir.abel_invariant(circle, zs, ps)
        rep.line(f"invariant={K.base.format(inv)} principal={'yes' if inv == K.base.one else 'no'}")
        rep.put(invariant=K.base.to_json(inv), principal=inv == K.base.one)
        return
    if not args.field:
        raise ValidationError("need --field for a split circle, or --K/--k for a Galois circle")
    F = parse_field(args.field)
    zs, ps = _divisor(F, args.zeros), _divisor(F, args.poles)
    circle = cir.SplitCircle(len(zs), F)
    inv = cir.abel_invariant(circle, zs, ps)
    b = cir.section_with_divisor(circle, zs, ps)
    rep.line(f"invariant={F.format(inv)} principal={'yes' if b is not None else 'no'}")
    if b is not None:
        rep.line("scalars=" + ",".join(F.format(x) for x in b), detail=True)
    rep.put(invariant=F.to_json(inv), principal=b is not None,
            scalars=[F.to_json(x) for x in b] if b is not None else None)


# -- curve --------------------------------------------------------------------

def _group(args):
    g = args.group.strip()
    if g.startswith("Z/") or g.startswith("Z"):
        n = int(g.lstrip("Z/"))
        return cir.cyclic_group(n), [str(i) for i in range(n)]
    if g.startswith("S") and g[1:].isdigit():
        table, elems = cir.symmetric_group(int(g[1:]))
        return table, ["".join(str(x + 1) for x in p) for p in elems]
    table = _load_json_arg(g)
    return table, [str(i) for i in range(len(table))]


def cmd_curve_build(args, rep):
    table, labels = _group(args)
    if args.gens == "transpositions":
        if not args.group.strip().startswith("S"):
            raise ValidationError("'transpositions' needs a symmetric group")
        _, elems = cir.symmetric_group(int(args.group.strip()[1:]))
        gens = cir.transpositions(elems)
    else:
        gens = [int(x) for x in split_top(args.gens)]
    C = cir.build_universal_curve(table, gens)
    counts = cir.check_universal_curve(C)
    rep.line(f"nodes={C.node_count} components={C.component_count} orbits={len(C.orbits)} "
             f"connected={'yes' if C.is_connected() else 'no'}")
    for v, branches in C.adjacency().items():
        br = " ".join(f"C{i}@{end}" for i, end in branches)
        rep.line(f"node {labels[v]}: {br}", detail=True)
    for i, (s, g, t, lab) in enumerate(C.components):
        rep.line(f"C{i}: {labels[s]} -> {labels[t]} via {labels[g]} orbit={labels[lab]}", detail=True)
    rep.put(nodes=C.node_count, components=[{"source": s, "gen": g, "target": t, "orbit": lab}
                                            for s, g, t, lab in C.components],
            orbits={str(k): v for k, v in C.orbits.items()}, connected=C.is_connected(),
            counts=_jsonable(counts))


# -- selftest / run -----------------------------------------------------------

def cmd_selftest(args, rep):
    from .suites import run_suite
    results = run_suite(args.suite)
    for r in results:
        rep.line(r.summary())
        for f in r.failures[:5]:
            rep.line(f"  failure: {f}", detail=True)
    rep.put(suites=[{"name": r.name, "checks": r.checks, "failures": len(r.failures),
                     "seconds": round(r.seconds, 3)} for r in results])
    if any(not r.passed for r in results):
        rep.status = EXIT_INPUT


def cmd_run(args, rep):
    """Execute a task document: named definitions plus a task list."""
    doc = _load_json_arg(args.doc)
    defs = doc.get("definitions", {})
    tasks = doc.get("tasks")
    if not isinstance(tasks, list):
        raise ValidationError("task document needs a 'tasks' list")
    results = []
    for i, task in enumerate(tasks):
        argv = _task_argv(task, defs, i)
        sub = Report()
        ns = build_parser().parse_args(argv)
        ns.json, ns.quiet = args.json, args.quiet
        try:
            ns.func(ns, sub)
        except BrauerKitError as e:
            sub.status = EXIT_INPUT
            sub.line(f"error: {_diagnostic(e)}")
            sub.put(error=_diagnostic(e))
        rep.line(f"[{i}] {' '.join(task['command'].split())}")
        for text, detail in sub.lines:
            rep.line("  " + text, detail)
        results.append({"command": task["command"], "status": sub.status, "result": sub.data})
        rep.status = max(rep.status, sub.status)
    rep.put(tasks=results)


def _resolve(value, defs):
    if isinstance(value, str) and value.startswith("@"):
        name = value[1:]
        if name not in defs:
            raise ValidationError(f"unresolved reference {value!r}")
        return _resolve(defs[name], defs)
    return value


def _task_argv(task, defs, i):
    if not isinstance(task, dict) or "command" not in task:
        raise ValidationError(f"task {i} needs a 'command'")
    argv = task["command"].split()
    opts = {}
    for key, val in task.items():
        if key in ("command", "format"):
            continue
        val = _resolve(val, defs)
        if key in ("class", "bundle", "circle") and isinstance(val, dict):
            for k2, v2 in val.items():
                opts[k2] = _resolve(v2, defs)
        else:
            opts[key] = val
    for key, val in opts.items():
        flag = "--" + {"lambda": "lambda"}.get(key, key)
        if isinstance(val, list):
            if key == "algebra":
                for a in val:
                    argv += [flag, json.dumps(a) if isinstance(a, dict) else str(a)]
                continue
            val = ",".join(str(x) for x in val) if all(not isinstance(x, list) for x in val) else json.dumps(val)
        elif isinstance(val, dict):
            val = json.dumps(val)
        elif isinstance(val, bool):
            if val:
                argv.append(flag)
            continue
        argv += [flag, str(val)]
    return argv


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


# -- parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="headline lines only")
    common.add_argument("--bound", type=int, default=10, help="search height bound (default 10)")

    p = argparse.ArgumentParser(prog="brauerkit", parents=[common],
                                description="Exact computations with central simple algebras and Brauer classes.")
    groups = p.add_subparsers(dest="group", required=True)

    def ext_opts(sp):
        sp.add_argument("--ext", help="cyclic extension, e.g. F9/F3, F9t/F3t, Q(i)/Q")
        sp.add_argument("--k", help="base field (with --K)")
        sp.add_argument("--K", help="extension field (with --k)")

    def add(group, name, func, helptext):
        sp = group.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=func)
        return sp

    g = groups.add_parser("field", help="norms, norm membership, Hilbert 90").add_subparsers(dest="cmd", required=True)
    sp = add(g, "norm", cmd_field_norm, "norm and trace of an element")
    ext_opts(sp)
    sp.add_argument("--x", required=True)
    sp = add(g, "membership", cmd_field_membership, "is a an element of the norm group")
    ext_opts(sp)
    sp.add_argument("--a", required=True)
    sp = add(g, "hilbert90", cmd_field_hilbert90, "f with lambda = f/sigma(f)")
    ext_opts(sp)
    sp.add_argument("--lambda", dest="lam", required=True)

    g = groups.add_parser("algebra", help="structure-constant algebras").add_subparsers(dest="cmd", required=True)
    for name, func, h in [("check", cmd_algebra_check, "validate and summarize"),
                          ("tensor", cmd_algebra_tensor, "tensor product of two algebras"),
                          ("opp", cmd_algebra_opp, "opposite algebra"),
                          ("zerodivisor", cmd_algebra_zerodivisor, "search for or rule out zero divisors"),
                          ("ideals", cmd_algebra_ideals, "right and left ideal dimensions (finite fields)")]:
        sp = add(g, name, func, h)
        sp.add_argument("--algebra", action="append", required=True,
                        help="M2(F3), (-1,-1)_Q, (F9/F3,2), inline JSON or a JSON file")

    g = groups.add_parser("cyclic", help="cyclic algebras and their classes").add_subparsers(dest="cmd", required=True)
    for name, func, h in [("build", cmd_cyclic_build, "structure constants of (K/k, sigma, a)"),
                          ("split", cmd_cyclic_split, "split verdict with witnesses"),
                          ("period", cmd_cyclic_period, "order in the Brauer group"),
                          ("index", cmd_cyclic_index, "index bounds"),
                          ("decompose", cmd_cyclic_decompose, "primary decomposition"),
                          ("nrd", cmd_cyclic_nrd, "reduced norm form")]:
        sp = add(g, name, func, h)
        ext_opts(sp)
        sp.add_argument("--a", required=True)

    g = groups.add_parser("sb", help="projective spaces over finite fields").add_subparsers(dest="cmd", required=True)
    sp = add(g, "points", cmd_sb_points, "points of P^n(F_q)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    sp = add(g, "zeros", cmd_sb_zeros, "zero locus of the vector field of a matrix")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--matrix", required=True, help="JSON rows of element literals")
    sp = add(g, "dictionary", cmd_sb_dictionary, "minimal ideals of M_{n+1}(F_q) against points")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--list", action="store_true")

    g = groups.add_parser("circle", help="bundles on circles of rational curves").add_subparsers(dest="cmd", required=True)
    for name, func, h in [("class", cmd_circle_class, "Brauer class of a line bundle on C(m, K)"),
                          ("push", cmd_circle_push, "pushforward to the Galois circle"),
                          ("end", cmd_circle_end, "endomorphism algebra of the pushforward")]:
        sp = add(g, name, func, h)
        ext_opts(sp)
        sp.add_argument("--lambda", dest="lam", required=True, help="comma-separated gluing values")
    sp = add(g, "pull", cmd_circle_pull, "pullback of a Galois line bundle")
    ext_opts(sp)
    sp.add_argument("--lambda1", required=True)
    sp = add(g, "abel", cmd_circle_abel, "invariant of zero/pole data")
    ext_opts(sp)
    sp.add_argument("--field", help="base field of a split circle")
    sp.add_argument("--zeros", required=True, help="per-component lists separated by ';'")
    sp.add_argument("--poles", required=True)

    g = groups.add_parser("curve", help="universal curves of group data").add_subparsers(dest="cmd", required=True)
    sp = add(g, "build", cmd_curve_build, "components, nodes and edge orbits")
    sp.add_argument("--group", required=True, help="Z/n, S3, or a JSON multiplication table")
    sp.add_argument("--gens", required=True, help="comma-separated element indices, or 'transpositions'")

    sp = groups.add_parser("selftest", parents=[common], help="built-in verification suites")
    sp.add_argument("--suite", default="all")
    sp.set_defaults(func=cmd_selftest)

    sp = groups.add_parser("run", parents=[common], help="execute a JSON task document")
    sp.add_argument("--doc", required=True)
    sp.set_defaults(func=cmd_run)
    return p


def _diagnostic(e):
    kinds = {SizeLimitExceeded: "size limit", UnsupportedError: "unsupported",
             InternalError: "internal check failed", ValidationError: "invalid input"}
    for cls, label in kinds.items():
        if isinstance(e, cls):
            return f"{label}: {e}"
    return str(e)


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report()
    try:
        args.func(args, rep)
    except (BrauerKitError, json.JSONDecodeError, OSError) as e:
        msg = _diagnostic(e) if isinstance(e, BrauerKitError) else f"invalid input: {e}"
        if args.json:
            out.write(json.dumps({"error": msg}) + "\n")
        else:
            sys.stderr.write(f"brauerkit: {msg}\n")
        return EXIT_INPUT
    rep.emit(args, out)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
