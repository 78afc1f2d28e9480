"""Command-line front end: algebra/morphism/value file formats, DOT output
for Hasse diagrams, and subcommands wiring the library together.

Exit codes: 0 success (all checked properties hold), 1 a checked property
fails (report on stdout), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catlaws import (
    algebra_from_ea,
    em_algebra_check,
    t_obj,
    verify_counit_naturality,
    verify_monad_laws,
    verify_triangles,
    verify_unit_naturality,
)
from .core import (
    Algebra,
    FiniteEa,
    FiniteGea,
    StructureError,
    builtin,
    derive_order,
    find_top,
    validate_ea,
    validate_gea,
)
from .enumeration import enumerate_eas, enumerate_geas
from .morphisms import (
    Morphism,
    check_full,
    check_morphism,
    enumerate_morphisms,
    transpose_to_ea,
    transpose_to_gea,
)
from .states import (
    AdditiveMap,
    check_additive,
    check_state,
    enumerate_ideals,
    extend_state,
    ideal_correspondence_probe,
)
from .unitization import unitize


class ParseError(StructureError):
    """A file-format error, carrying the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def _content_lines(text: str):
    """Yield (lineno, payload) with comments and blanks stripped."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_algebra(text: str, default_name: str = "") -> Algebra:
    """Line-oriented format: `algebra NAME`, `elements: ...`, `zero: e`,
    optional `top: e`, and `sum: a b c` meaning a+b = c.  The loader
    symmetrizes and inserts the zero-row sums."""
    name = default_name
    elements: list[str] | None = None
    zero: str | None = None
    top: str | None = None
    sums: list[tuple[str, str, str]] = []
    pair_lines: dict[tuple[str, str], tuple[str, int]] = {}

    for lineno, line in _content_lines(text):
        if line.startswith("algebra "):
            name = line[len("algebra "):].strip()
        elif line.startswith("elements:"):
            if elements is not None:
                raise ParseError("duplicate elements line", lineno)
            elements = line[len("elements:"):].split()
            if not elements:
                raise ParseError("empty elements line", lineno)
        elif line.startswith("zero:"):
            if zero is not None:
                raise ParseError("duplicate zero line", lineno)
            zero = _one_token(line, "zero:", lineno)
        elif line.startswith("top:"):
            if top is not None:
                raise ParseError("duplicate top line", lineno)
            top = _one_token(line, "top:", lineno)
        elif line.startswith("sum:"):
            parts = line[len("sum:"):].split()
            if len(parts) != 3:
                raise ParseError("sum line needs exactly three elements", lineno)
            a, b, c = parts
            key = (a, b) if a <= b else (b, a)
            if key in pair_lines and pair_lines[key][0] != c:
                raise ParseError(
                    f"conflicting result for {a}+{b}: {pair_lines[key][0]} "
                    f"(line {pair_lines[key][1]}) vs {c}",
                    lineno,
                )
            pair_lines[key] = (c, lineno)
            sums.append((a, b, c))
        else:
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", lineno)

    if elements is None:
        raise ParseError("missing elements line")
    if zero is None:
        raise ParseError("missing zero line")
    known = set(elements)
    for (a, b), (c, lineno) in sorted(pair_lines.items(), key=lambda kv: kv[1][1]):
        for e in (a, b, c):
            if e not in known:
                raise ParseError(f"unknown element {e!r}", lineno)
        if (a == zero and c != b) or (b == zero and c != a):
            raise ParseError(f"sum contradicts {zero}+x = x", lineno)
    try:
        if top is not None:
            return FiniteEa.build(elements, zero, top, sums, name=name)
        return FiniteGea.build(elements, zero, sums, name=name)
    except StructureError as exc:
        raise ParseError(str(exc)) from exc


def _one_token(line: str, prefix: str, lineno: int) -> str:
    parts = line[len(prefix):].split()
    if len(parts) != 1:
        raise ParseError(f"{prefix} line needs exactly one element", lineno)
    return parts[0]


def serialize_algebra(alg: Algebra) -> str:
    """Canonical text form: sums listed once per nonzero pair, sorted by
    index pair; the zero-row closure is left implicit."""
    base = alg.base if isinstance(alg, FiniteEa) else alg
    lines = []
    if base.name:
        lines.append(f"algebra {base.name}")
    lines.append("elements: " + " ".join(base.names))
    lines.append(f"zero: {base.names[base.zero]}")
    if isinstance(alg, FiniteEa):
        lines.append(f"top: {alg.names[alg.top]}")
    z = base.zero
    for a, b, c in base.sums.entries:
        if a == z or b == z:
            continue
        lines.append(f"sum: {base.names[a]} {base.names[b]} {base.names[c]}")
    return "\n".join(lines) + "\n"


def parse_morphism(
    text: str,
    default_source: Algebra | None = None,
    default_target: Algebra | None = None,
    base_dir: Path | None = None,
) -> Morphism:
    """Morphism files: optional `morphism NAME`, optional `source:` and
    `target:` algebra references (path or builtin:NAME), optional
    `kind: gea|ea`, and one `map: a -> x` line per source element."""
    source = default_source
    target = default_target
    kind: str | None = None
    entries: list[tuple[str, str, int]] = []
    for lineno, line in _content_lines(text):
        if line.startswith("morphism "):
            continue
        if line.startswith("source:"):
            source = load_algebra(_one_token(line, "source:", lineno), base_dir)
        elif line.startswith("target:"):
            target = load_algebra(_one_token(line, "target:", lineno), base_dir)
        elif line.startswith("kind:"):
            kind = _one_token(line, "kind:", lineno)
            if kind not in ("gea", "ea"):
                raise ParseError(f"kind must be gea or ea, not {kind!r}", lineno)
        elif line.startswith("map:"):
            parts = line[len("map:"):].split()
            if len(parts) != 3 or parts[1] != "->":
                raise ParseError("map line must read `map: a -> x`", lineno)
            entries.append((parts[0], parts[2], lineno))
        else:
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", lineno)
    if source is None:
        raise ParseError("no source algebra (give a source: line)")
    if target is None:
        raise ParseError("no target algebra (give a target: line)")
    if kind is None:
        kind = "ea" if isinstance(source, FiniteEa) and isinstance(target, FiniteEa) else "gea"
    if kind == "gea":
        source = source.base if isinstance(source, FiniteEa) else source
        target = target.base if isinstance(target, FiniteEa) else target
    elif not (isinstance(source, FiniteEa) and isinstance(target, FiniteEa)):
        raise ParseError("kind ea needs effect algebras on both ends")

    mapping = [-1] * source.n
    for src, tgt, lineno in entries:
        i = _index_or_error(source, src, lineno)
        if mapping[i] != -1:
            raise ParseError(f"element {src!r} mapped twice", lineno)
        mapping[i] = _index_or_error(target, tgt, lineno)
    missing = [source.names[i] for i, v in enumerate(mapping) if v == -1]
    if missing:
        raise ParseError(f"mapping is not total; missing {', '.join(missing)}")
    return Morphism(source, target, tuple(mapping), kind)


def _index_or_error(alg: Algebra, name: str, lineno: int) -> int:
    try:
        return alg.index(name)
    except StructureError as exc:
        raise ParseError(str(exc), lineno) from exc


def parse_additive_map(text: str, algebra: FiniteGea) -> AdditiveMap:
    """Value files: `val: a = 1/4` lines with exact rational literals;
    unlisted elements default to 0."""
    values: dict[str, str] = {}
    for lineno, line in _content_lines(text):
        if not line.startswith("val:"):
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", lineno)
        parts = line[len("val:"):].split()
        if len(parts) != 3 or parts[1] != "=":
            raise ParseError("val line must read `val: a = p/q`", lineno)
        name, literal = parts[0], parts[2]
        if name in values:
            raise ParseError(f"element {name!r} valued twice", lineno)
        _index_or_error(algebra, name, lineno)
        values[name] = literal
    try:
        return AdditiveMap.from_names(algebra, values)
    except (StructureError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from exc


def serialize_values(m: AdditiveMap) -> str:
    alg = m.algebra
    return "".join(f"val: {alg.names[i]} = {m.values[i]}\n" for i in range(alg.n))


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(alg: Algebra) -> str:
    """The Hasse diagram (covering edges only) of the derived order,
    bottom-up, nodes and edges in element-index order."""
    base = alg.base if isinstance(alg, FiniteEa) else alg
    order = derive_order(base)
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, name in enumerate(base.names):
        if isinstance(alg, FiniteEa) and i == alg.top and name.endswith("*"):
            lines.append(f"  {_dot_quote(name)} [label={_dot_quote(name + ' [1]')}];")
        else:
            lines.append(f"  {_dot_quote(name)};")
    for a, b in order.covers():
        lines.append(f"  {_dot_quote(base.names[a])} -> {_dot_quote(base.names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_algebra(ref: str, base_dir: Path | None = None) -> Algebra:
    """A reference is either `builtin:NAME` or a path to an algebra file."""
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:"):])
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {ref}: {exc}") from exc
    return parse_algebra(text, default_name=path.stem)


def _as_gea(alg: Algebra) -> FiniteGea:
    return alg.base if isinstance(alg, FiniteEa) else alg


# ---------------------------------------------------------------- commands


def _cmd_check(args) -> int:
    alg = load_algebra(args.file)
    if isinstance(alg, FiniteEa):
        report = validate_ea(alg)
        if report.valid:
            print("valid EA")
            return 0
        print("invalid EA")
        print(report)
        return 1
    report = validate_gea(alg)
    if not report.valid:
        print("invalid GEA")
        print(report)
        return 1
    top = find_top(alg)
    if top is None:
        print("valid GEA; not an EA (no top)")
    else:
        print(f"valid GEA; bounded above by {alg.names[top]}")
    return 0


def _cmd_unitize(args) -> int:
    alg = _as_gea(load_algebra(args.file))
    try:
        result = unitize(alg)
    except StructureError as exc:
        print(f"cannot unitize: {exc}")
        return 1
    out = emit_dot(result) if args.dot else serialize_algebra(result)
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def _cmd_order(args) -> int:
    alg = load_algebra(args.file)
    report = validate_ea(alg) if isinstance(alg, FiniteEa) else validate_gea(_as_gea(alg))
    if not report.valid:
        print(report)
        return 1
    if args.dot:
        sys.stdout.write(emit_dot(alg))
        return 0
    base = _as_gea(alg)
    order = derive_order(base)
    for a, b in sorted(order.pairs):
        print(f"le: {base.names[a]} {base.names[b]}")
    return 0


def _cmd_hom(args) -> int:
    source = load_algebra(args.source)
    target = load_algebra(args.target)
    morphisms = enumerate_morphisms(source, target, args.kind)
    if args.full_only:
        morphisms = [m for m in morphisms if check_full(m).full]
    if args.count:
        print(len(morphisms))
        return 0
    for i, m in enumerate(morphisms):
        if i:
            print()
        print(f"morphism {i}")
        for line in m.lines():
            print(line)
    return 0


def _cmd_laws(args) -> int:
    alg = load_algebra(args.file)
    base = _as_gea(alg)
    report = validate_ea(alg) if isinstance(alg, FiniteEa) else validate_gea(base)
    if not report.valid:
        print(report)
        return 1
    run_all = not (args.triangles or args.monad or args.em or args.naturality)
    reports = []

    if run_all or args.triangles:
        ea = load_algebra(args.triangles) if args.triangles else unitize(base)
        if not isinstance(ea, FiniteEa):
            raise ParseError("triangle check needs an effect algebra (has no top)")
        reports.extend(verify_triangles(base, ea))
    if run_all or args.monad:
        reports.extend(verify_monad_laws(base))
    if args.em or (run_all and isinstance(alg, FiniteEa)):
        if isinstance(alg, FiniteEa):
            x, h = algebra_from_ea(alg)
            reports.extend(em_algebra_check(x, h))
        else:
            found = _em_structure_maps(base)
            print(f"em-structure-maps: {len(found)}")
    if args.naturality:
        mor = parse_morphism(Path(args.naturality).read_text(), default_source=alg)
        mreport = check_morphism(mor)
        if not mreport.valid:
            print(mreport)
            return 1
        if mor.kind == "gea":
            reports.append(verify_unit_naturality(mor))
        else:
            reports.append(verify_counit_naturality(mor))

    for r in reports:
        print(r)
    return 0 if all(r.ok for r in reports) else 1


def _em_structure_maps(x: FiniteGea) -> list[Morphism]:
    return [
        h
        for h in enumerate_morphisms(t_obj(x), x, "gea")
        if all(r.ok for r in em_algebra_check(x, h))
    ]


def _cmd_state(args) -> int:
    alg = _as_gea(load_algebra(args.algebra))
    try:
        text = Path(args.values).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.values}: {exc}") from exc
    s = parse_additive_map(text, alg)
    report = check_additive(s)
    if not report.valid:
        print("not an additive map")
        print(report)
        return 1
    t = extend_state(s)
    assert check_state(t).valid
    print(f"# state on {t.algebra.name}")
    sys.stdout.write(serialize_values(t))
    return 0


def _cmd_ideals(args) -> int:
    alg = _as_gea(load_algebra(args.file))
    ideals = enumerate_ideals(alg)
    for members in ideals:
        print("ideal: " + " ".join(alg.names[i] for i in members))
    print(f"count: {len(ideals)}")
    if args.probe:
        probe = ideal_correspondence_probe(alg)
        print(f"gea-homs: {probe.gea_hom_count}")
        print(f"ea-homs: {probe.ea_hom_count}")
        print(f"hom-counts-equal: {'yes' if probe.hom_counts_equal else 'no'}")
        print(f"ideal-count-matches: {'yes' if probe.ideal_count_matches else 'no'}")
    return 0


def _cmd_enumerate(args) -> int:
    mode = "up-to-iso" if args.up_to_iso else "labeled"
    stream = enumerate_eas(args.n, mode) if args.kind == "ea" else enumerate_geas(args.n, mode)
    emitted = 0
    for alg in stream:
        if args.emit:
            directory = Path(args.emit)
            directory.mkdir(parents=True, exist_ok=True)
            (directory / f"{alg.name}.alg").write_text(serialize_algebra(alg))
        emitted += 1
    print(f"count: {emitted}")
    return 0


def _cmd_transpose(args) -> int:
    p = _as_gea(load_algebra(args.algebra))
    text = Path(args.morphism).read_text()
    fp = unitize(p)
    if args.direction == "to-ea":
        g = parse_morphism(text, default_source=p)
        if g.kind != "gea":
            raise ParseError("to-ea expects a GEA morphism out of the algebra")
        report = check_morphism(g)
        if not report.valid:
            print(report)
            return 1
        target_top = find_top(g.target)
        if target_top is None:
            raise ParseError("target has no top; cannot transpose into it")
        result = transpose_to_ea(g, FiniteEa(g.target, target_top))
        print(f"# ea morphism: {result.source.name} -> {result.target.name}")
    else:
        f = parse_morphism(text, default_source=fp)
        if f.kind != "ea":
            raise ParseError("to-gea expects an EA morphism out of the unitization")
        report = check_morphism(f)
        if not report.valid:
            print(report)
            return 1
        result = transpose_to_gea(f, p)
        print(f"# gea morphism: {result.source.name} -> {result.target.name}")
    for line in result.lines():
        print(line)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effectalg",
        description="Finite effect-algebra workbench. Algebra references are "
        "file paths or builtin:NAME (fig1, fig1_unitized, trivial, "
        "two_chain_gea, two_squared, chain(N), boolean(N)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate the GEA/EA laws of an algebra file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("unitize", help="adjoin a unit and print the resulting EA")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram instead")
    p.set_defaults(func=_cmd_unitize)

    p = sub.add_parser("order", help="print the derived order (or its Hasse diagram)")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("hom", help="enumerate all morphisms between two algebras")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--kind", choices=("gea", "ea"), default="gea")
    p.add_argument("--count", action="store_true")
    p.add_argument("--full-only", action="store_true")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("laws", help="verify adjunction/monad/EM laws pointwise")
    p.add_argument("file")
    p.add_argument("--triangles", metavar="WITH", help="EA reference for the right triangle")
    p.add_argument("--monad", action="store_true")
    p.add_argument("--em", action="store_true")
    p.add_argument("--naturality", metavar="MOR", help="morphism file to check naturality on")
    p.set_defaults(func=_cmd_laws)

    p = sub.add_parser("state", help="extend an additive map to a state on the unitization")
    p.add_argument("action", choices=("extend",))
    p.add_argument("algebra")
    p.add_argument("values")
    p.set_defaults(func=_cmd_state)

    p = sub.add_parser("ideals", help="list ideals; --probe compares with hom counts")
    p.add_argument("file")
    p.add_argument("--probe", action="store_true")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("enumerate", help="exhaustively generate algebras of a given size")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=("gea", "ea"), default="gea")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--emit", metavar="DIR", help="write each algebra as a file")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("transpose", help="transpose a morphism across the adjunction")
    p.add_argument("algebra")
    p.add_argument("morphism")
    p.add_argument("--direction", choices=("to-ea", "to-gea"), required=True)
    p.set_defaults(func=_cmd_transpose)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
