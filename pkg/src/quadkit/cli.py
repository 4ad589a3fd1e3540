"""Command line front end: counting, enumeration, classification, checks.

Exit codes: 0 success, 1 usage or parse problems, 2 verification mismatch,
3 capacity refusal.  Data goes to stdout, diagnostics to stderr.  JSON
output renders counts as decimal strings so consumers never round them.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import classify16, decomposition, enumeration, latin, reference
from .canonical import reduce_to_type_c, total_from_type_c
from .enumeration import CapacityError
from .quad_core import DeckSpec
from .square_model import (
    NotAQuadError,
    QuadSquare,
    SquareFormatError,
    all_cells_distinct,
    format_square,
    is_latin,
    is_magic,
    is_semimagic,
    is_strongly_magic,
    num_attributes,
    parse_square,
    type_pattern,
    value_distribution,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAPACITY = 3

KINDS = ("semimagic", "magic", "strongly-magic")
FORMATS = ("text", "json", "csv")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# count


def _formula_counts(kind: str, deck: DeckSpec):
    if kind == "semimagic":
        type_c = enumeration.semimagic_type_c_closed_form(deck)
    elif kind == "magic":
        type_c = enumeration.magic_type_c_closed_form(deck)
    else:
        type_c = 1
    return type_c, total_from_type_c(type_c, deck)


def _refuse_search(kind: str, deck: DeckSpec) -> None:
    caps = {
        "semimagic": enumeration.SEMIMAGIC_SEARCH_MAX_BITS,
        "magic": enumeration.MAGIC_SEARCH_MAX_BITS,
    }
    cap = caps.get(kind)
    if cap is not None and deck.bits > cap:
        raise CapacityError(
            f"{kind} type-C search above {cap} bits is refused; use --method formula")


def _search_counts(kind: str, deck: DeckSpec):
    _refuse_search(kind, deck)
    if kind == "semimagic":
        type_c = enumeration.enumerate_type_c_semimagic(deck)
    elif kind == "magic":
        type_c = enumeration.enumerate_type_c_magic(deck)
    else:
        type_c = enumeration.enumerate_type_c_strongly_magic(deck)
    return type_c, total_from_type_c(type_c, deck)


def cmd_count(args) -> int:
    deck = DeckSpec(args.deck_bits)
    pairs = {}
    if args.method in ("formula", "both"):
        pairs["formula"] = _formula_counts(args.kind, deck)
    if args.method in ("search", "both"):
        pairs["search"] = _search_counts(args.kind, deck)
    shown = pairs.get("search", pairs.get("formula"))
    report = {"kind": args.kind, "deck_bits": deck.bits, "method": args.method,
              "type_c": shown[0]}
    if not args.type_c:
        report["total"] = shown[1]
    if args.method == "both":
        report["verdict"] = "MATCH" if pairs["formula"] == pairs["search"] else "MISMATCH"
        if report["verdict"] == "MISMATCH":
            report["formula_type_c"] = pairs["formula"][0]
            if not args.type_c:
                report["formula_total"] = pairs["formula"][1]
    if args.format == "json":
        print(json.dumps({k: str(v) if isinstance(v, int) else v for k, v in report.items()}))
    elif args.format == "csv":
        print(",".join(report))
        print(",".join(str(v) for v in report.values()))
    else:
        for key, value in report.items():
            print(f"{key}={value}")
    return EXIT_MISMATCH if report.get("verdict") == "MISMATCH" else EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    deck = DeckSpec(args.deck_bits)
    if not args.type_c:
        return _fail("only type-C enumeration is supported; pass --type-c")
    if args.limit is not None and args.limit < 0:
        return _fail("--limit must be nonnegative")
    _refuse_search(args.kind, deck)
    iterators = {
        "semimagic": enumeration.iter_type_c_semimagic,
        "magic": enumeration.iter_type_c_magic,
        "strongly-magic": enumeration.iter_type_c_strongly_magic,
    }
    stream = iterators[args.kind](deck)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    if args.format == "csv":
        print(",".join(f"c{i}{j}" for i in range(4) for j in range(4)))
    emitted = 0
    for square in stream:
        if args.format == "text":
            if emitted:
                print()
            sys.stdout.write(format_square(square, base4=args.base4))
        elif args.format == "json":
            print(json.dumps({"deck_bits": square.bits,
                              "cells": [list(square.row(i)) for i in range(4)]}))
        else:
            print(",".join(str(c) for c in square.cells))
        emitted += 1
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def _pattern_dict(square: QuadSquare, attribute: int):
    try:
        pattern = type_pattern(square, attribute)
    except NotAQuadError:
        return None
    return {"rows": pattern.rows, "cols": pattern.cols}


def cmd_check(args) -> int:
    deck = DeckSpec(args.deck_bits)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as handle:
            text = handle.read()
    square = parse_square(text, deck.bits, base4=args.base4)
    predicates = {
        "distinct": all_cells_distinct(square),
        "latin": is_latin(square),
        "semimagic": is_semimagic(square),
        "magic": is_magic(square),
        "strongly_magic": is_strongly_magic(square),
    }
    attributes = []
    for k in range(num_attributes(deck.bits)):
        attributes.append({
            "attribute": k,
            "pattern": _pattern_dict(square, k),
            "distribution": list(value_distribution(square, k)),
        })
    reduced = reduce_to_type_c(square)[0] if predicates["semimagic"] else None
    if args.format == "json":
        print(json.dumps({
            "deck_bits": deck.bits,
            "cells": [list(square.row(i)) for i in range(4)],
            "predicates": predicates,
            "attributes": attributes,
            "type_c": [list(reduced.row(i)) for i in range(4)] if reduced else None,
        }))
    elif args.format == "csv":
        header = ["deck_bits"] + [f"c{i}{j}" for i in range(4) for j in range(4)]
        header += list(predicates)
        print(",".join(header))
        row = [deck.bits, *square.cells]
        row += [str(v).lower() for v in predicates.values()]
        print(",".join(str(v) for v in row))
    else:
        print(f"deck_bits={deck.bits}")
        print("cells:")
        sys.stdout.write(format_square(square, base4=args.base4))
        for name, value in predicates.items():
            print(f"{name}={str(value).lower()}")
        for entry in attributes:
            pattern = entry["pattern"]
            shown = f"{pattern['rows']}/{pattern['cols']}" if pattern else "none"
            dist = ",".join(str(d) for d in entry["distribution"])
            print(f"attribute={entry['attribute']} pattern={shown} distribution={dist}")
        if reduced is not None:
            print("type_c:")
            sys.stdout.write(format_square(reduced, base4=args.base4))
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify


def _pair_key(pattern) -> str:
    rows, cols = sorted((pattern.rows, pattern.cols))
    return f"{rows}/{cols}"


def _dist_str(dist) -> str:
    return ",".join(str(d) for d in dist)


def _dist_set_str(dists) -> str:
    return "|".join(_dist_str(d) for d in sorted(dists))


def _emit_orbit_classes(args, classes) -> None:
    breakdown = {}
    for cls in classes:
        breakdown[_pair_key(cls.pattern)] = breakdown.get(_pair_key(cls.pattern), 0) + 1
    if args.format == "json":
        print(json.dumps({
            "classes": len(classes),
            "breakdown": dict(sorted(breakdown.items())),
            "members": [{
                "pattern": {"rows": cls.pattern.rows, "cols": cls.pattern.cols},
                "distribution": list(cls.distribution),
                "size": cls.size,
                "cells": [list(cls.canonical.row(i)) for i in range(4)],
            } for cls in classes],
        }))
    elif args.format == "csv":
        print("rows,cols,distribution,size,cells")
        for cls in classes:
            cells = " ".join(str(c) for c in cls.canonical.cells)
            print(f"{cls.pattern.rows},{cls.pattern.cols},"
                  f"{'-'.join(str(d) for d in cls.distribution)},{cls.size},{cells}")
    else:
        print(f"classes={len(classes)}")
        for pair, count in sorted(breakdown.items()):
            print(f"pattern={pair} classes={count}")
        for cls in classes:
            cells = ",".join(str(c) for c in cls.canonical.cells)
            print(f"class pattern={cls.pattern.rows}/{cls.pattern.cols} "
                  f"distribution={_dist_str(cls.distribution)} size={cls.size} cells={cells}")


def _emit_table(args, label: str, table) -> None:
    items = sorted(table.items())
    if args.format == "json":
        print(json.dumps({
            ("/".join(key) if isinstance(key, tuple) else key):
                [list(d) for d in sorted(dists)]
            for key, dists in items}))
    elif args.format == "csv":
        print(f"{label},distribution")
        for key, dists in items:
            name = "/".join(key) if isinstance(key, tuple) else key
            for dist in sorted(dists):
                print(f"{name},{'-'.join(str(d) for d in dist)}")
    else:
        for key, dists in items:
            name = "/".join(key) if isinstance(key, tuple) else key
            print(f"{label}={name} distributions={_dist_set_str(dists)}")


def cmd_classify(args) -> int:
    if args.scope == "deck16-semimagic":
        _emit_orbit_classes(args, classify16.classify_semimagic16())
    elif args.scope == "deck16-strongly-magic":
        _emit_orbit_classes(args, classify16.classify_strongly_magic16(args.full_deck))
    elif args.scope == "bprime":
        deck = DeckSpec(args.deck_bits if args.deck_bits is not None else 8)
        cases = decomposition.classify_b_prime(deck)
        if args.format == "json":
            print(json.dumps({"cases": len(cases), "members": [{
                "symmetry_factor": case.symmetry_factor,
                "multiplicity_degree": case.multiplicity_degree,
                "a_count": case.a_count,
                "orbit_size": case.orbit_size,
                "cells": [list(case.representative.row(i)) for i in range(4)],
            } for case in cases]}))
        elif args.format == "csv":
            print("case,symmetry_factor,multiplicity_degree,a_count,orbit_size,cells")
            for index, case in enumerate(cases, start=1):
                cells = " ".join(str(c) for c in case.representative.cells)
                print(f"{index},{case.symmetry_factor},{case.multiplicity_degree},"
                      f"{case.a_count},{case.orbit_size},{cells}")
        else:
            print(f"cases={len(cases)}")
            for index, case in enumerate(cases, start=1):
                cells = ",".join(str(c) for c in case.representative.cells)
                print(f"case={index} symmetry_factor={case.symmetry_factor} "
                      f"degree={case.multiplicity_degree} a_count={case.a_count} "
                      f"orbit_size={case.orbit_size} cells={cells}")
    elif args.scope == "distributions":
        _emit_table(args, "pattern", classify16.realizable_distributions())
    else:
        _emit_table(args, "pair", classify16.realizable_pairs())
    return EXIT_OK


# ---------------------------------------------------------------------------
# sequence


def cmd_sequence(args) -> int:
    if args.max_bits > 64:
        return _fail("--max-bits beyond 64 is not useful; formulas stay exact but slow")
    terms = enumeration.sequence_terms(args.kind, args.variant, args.max_bits)
    bits_range = range(4, args.max_bits + 1)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "variant": args.variant,
                          "terms": [{"deck_bits": b, "value": str(v)}
                                    for b, v in zip(bits_range, terms)]}))
    elif args.format == "csv":
        print("deck_bits,value")
        for b, v in zip(bits_range, terms):
            print(f"{b},{v}")
    else:
        for b, v in zip(bits_range, terms):
            print(f"{b} {v}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _check_sequences():
    for (kind, variant), expected in sorted(reference.SEQUENCES.items()):
        computed = enumeration.sequence_terms(kind, variant, 4 + len(expected) - 1)
        if list(computed) != list(expected):
            yield f"sequence-{kind}-{variant}", f"{computed} != {expected}"
        else:
            yield f"sequence-{kind}-{variant}", None


def _check_table8():
    found = {s.cells for s in enumeration.iter_type_c_magic(DeckSpec(4))}
    expected = set(reference.MAGIC16_TYPE_C_SQUARES)
    detail = None if found == expected else (
        f"missing {sorted(expected - found)}, extra {sorted(found - expected)}")
    yield "table8-magic16", detail


def _check_bprime_table():
    cases = decomposition.b_prime_reference_cases()
    got = tuple(case.representative.cells for case in cases)
    problems = []
    if got != reference.B_PRIME_REPRESENTATIVES:
        problems.append("representatives differ")
    if tuple(c.symmetry_factor for c in cases) != reference.B_PRIME_SYMMETRY_FACTORS:
        problems.append(f"F = {tuple(c.symmetry_factor for c in cases)}")
    if tuple(c.multiplicity_degree for c in cases) != reference.B_PRIME_DEGREES:
        problems.append(f"degrees = {tuple(c.multiplicity_degree for c in cases)}")
    if tuple(c.a_count for c in cases) != reference.B_PRIME_A_COUNTS:
        problems.append(f"#A = {tuple(c.a_count for c in cases)}")
    yield "bprime-table7", "; ".join(problems) or None


def _check_coefficients():
    derived = decomposition.coefficients_by_degree()
    expected = dict(enumerate(enumeration.SEMIMAGIC_TYPE_C_COEFFS))
    yield "closed-form-coefficients", None if derived == expected else f"{derived}"


def _check_classify16():
    classes = classify16.classify_semimagic16()
    breakdown = {}
    for cls in classes:
        key = tuple(sorted((cls.pattern.rows, cls.pattern.cols)))
        breakdown[key] = breakdown.get(key, 0) + 1
    case_canon = {classify16.canonical_form(g).cells
                  for forms in reference.SEMIMAGIC16_CASE_FORMS.values()
                  for g in forms}
    problems = []
    if breakdown != reference.SEMIMAGIC16_ORBIT_COUNTS:
        problems.append(f"breakdown {breakdown}")
    if {cls.canonical.cells for cls in classes} != case_canon:
        problems.append("canonical forms differ from the case-form closure")
    if sum(cls.size for cls in classes) != reference.SEMIMAGIC16_GRID_COUNT:
        problems.append("orbit sizes do not cover the grid universe")
    yield "classes-semimagic16", "; ".join(problems) or None
    if breakdown == reference.SEMIMAGIC16_CASE_COUNTS:
        tally = None
    else:
        diffs = ", ".join(
            f"{a}/{b} {reference.SEMIMAGIC16_CASE_COUNTS[(a, b)]}->{breakdown.get((a, b), 0)}"
            for a, b in sorted(reference.SEMIMAGIC16_CASE_COUNTS)
            if reference.SEMIMAGIC16_CASE_COUNTS[(a, b)] != breakdown.get((a, b), 0))
        tally = (f"{sum(reference.SEMIMAGIC16_CASE_COUNTS.values())} case forms"
                 f" reduce to {len(classes)} classes ({diffs})")
    yield "case-tally-semimagic16", tally
    strong = classify16.classify_strongly_magic16()
    full = classify16.classify_strongly_magic16(require_full_deck=True)
    expected = {classify16.canonical_form(g).cells for g in reference.STRONGLY_MAGIC16_GRIDS}
    got = {cls.canonical.cells for cls in strong}
    problems = []
    if len(strong) != 7 or got != expected:
        problems.append(f"{len(strong)} classes")
    if len(full) != 4:
        problems.append(f"{len(full)} full-deck classes")
    yield "classes-strongly-magic16", "; ".join(problems) or None


def _check_tables123():
    got = classify16.realizable_distributions()
    expected = {k: frozenset(v) for k, v in reference.DISTRIBUTION_TABLE.items()}
    yield "distribution-table1", None if got == expected else "distribution sets differ"
    got = classify16.realizable_pairs()
    expected = {k: frozenset(v) for k, v in reference.PAIR_TABLE.items()}
    yield "pair-table2", None if got == expected else "pair sets differ"
    potential, realized = classify16.strongly_magic_pair_table()
    expected_potential = {k: frozenset(v)
                          for k, v in reference.STRONGLY_MAGIC_POTENTIAL_PAIRS.items()}
    expected_realized = {k: frozenset(v)
                         for k, v in reference.STRONGLY_MAGIC_REALIZED_PAIRS.items()}
    problems = []
    if potential != expected_potential:
        problems.append("potential differs")
    if realized != expected_realized:
        problems.append("realized differs")
    yield "strong-pair-table3", "; ".join(problems) or None
    yield "s-column-proposition", None if classify16.check_s_column_proposition() else "counterexample"


def _check_latin():
    problems = []
    if latin.count_latin_squares_order4() != (reference.LATIN4_COUNT,
                                              reference.LATIN4_REDUCED_COUNT):
        problems.append(f"order-4 counts {latin.count_latin_squares_order4()}")
    if latin.count_mols_pairs() != reference.MOLS4_ORDERED_PAIRS:
        problems.append(f"MOLS pairs {latin.count_mols_pairs()}")
    reduced = latin.reduced_latin_squares()
    fixed = sum(1 for a in reduced for b in latin.all_latin_squares()
                if latin.are_orthogonal(a, b))
    if fixed != reference.MOLS4_ORDERED_PAIRS // 144:
        problems.append(f"reduced-first pairs {fixed}")
    if latin.count_latin_quad_squares(2) != reference.MOLS4_ORDERED_PAIRS:
        problems.append("two-attribute count != MOLS pairs")
    yield "latin-counts", "; ".join(problems) or None
    problems = []
    if latin.check_latin_combination(reference.INCOMPATIBLE_LATIN_TRIPLE):
        problems.append("incompatible triple accepted")
    else:
        cards = latin.assemble_cards(reference.INCOMPATIBLE_LATIN_TRIPLE)
        if cards.count(0) != 2 or cards.count(21) != 2:
            problems.append("expected cards 0 and 21 to repeat")
    if not latin.check_latin_combination(reference.COMPATIBLE_LATIN_TRIPLE):
        problems.append("compatible triple rejected")
    triple = reference.ORTHOGONAL_LATIN_TRIPLE
    if not all(latin.are_orthogonal(triple[i], triple[j])
               for i in range(3) for j in range(i + 1, 3)):
        problems.append("orthogonal triple not pairwise orthogonal")
    yield "latin-triples", "; ".join(problems) or None


def _check_full_deck16():
    deck = DeckSpec(4)
    problems = []
    for kind, expected in (("semimagic", 36126720), ("magic", 3225600),
                           ("strongly-magic", 322560)):
        direct = enumeration.full_deck_count(kind, deck)
        via_type_c = _search_counts(kind, deck)[1]
        if direct != expected or direct != via_type_c:
            problems.append(f"{kind}: direct {direct}, type-C {via_type_c}")
    yield "full-deck-16", "; ".join(problems) or None


def _check_decomposition(bits: int):
    deck = DeckSpec(bits)
    by_cases = decomposition.semimagic_type_c_by_decomposition(deck)
    closed = enumeration.semimagic_type_c_closed_form(deck)
    yield ("decomposition-identity",
           None if by_cases == closed else f"{by_cases} != {closed}")
    if bits <= enumeration.SEMIMAGIC_SEARCH_MAX_BITS:
        searched = enumeration.enumerate_type_c_semimagic(deck)
        yield ("decomposition-search",
               None if searched == closed else f"search {searched} != {closed}")
    cases = decomposition.classify_b_prime(deck)
    m = bits - 4
    problems = []
    if sum(c.orbit_size for c in cases) != (1 << max(m, 0)) ** 4:
        problems.append("orbit sizes do not partition the state space")
    stable = {c.representative.cells: c for c in decomposition.b_prime_reference_cases()}
    for case in cases:
        match = stable.get(case.representative.cells)
        if match is None and m >= 4:
            problems.append(f"unknown case {case.representative.cells}")
        elif match is not None and (
                case.symmetry_factor != match.symmetry_factor
                or case.multiplicity_degree != match.multiplicity_degree
                or case.a_count != match.a_count):
            problems.append(f"case invariants differ at {case.representative.cells}")
    yield "bprime-partition", "; ".join(problems) or None
    sample_deck = DeckSpec(min(bits, 5))
    problems = []
    for square in islice(enumeration.iter_type_c_semimagic(sample_deck), 500):
        low, high = decomposition.decompose_type_c(square)
        rebuilt = tuple(a | b for a, b in zip(low.cells, high.cells))
        if rebuilt != square.cells:
            problems.append(f"roundtrip failed for {square.cells}")
            break
    yield "decomposition-roundtrip", "; ".join(problems) or None


def cmd_verify(args) -> int:
    checks = []
    if args.suite in ("sequences", "all"):
        checks.append(_check_sequences())
    if args.suite in ("tables", "all"):
        checks.extend((_check_table8(), _check_bprime_table(), _check_coefficients(),
                       _check_classify16(), _check_tables123(), _check_latin(),
                       _check_full_deck16()))
    if args.suite in ("decomposition", "all"):
        bits = args.deck_bits if args.deck_bits is not None else 6
        checks.append(_check_decomposition(bits))
    failures = 0
    for generator in checks:
        for name, detail in generator:
            if detail is None:
                print(f"PASS {name}")
            else:
                failures += 1
                print(f"FAIL {name}: {detail}")
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="quadkit",
        description="Counting, enumeration, and classification of quad squares.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    count = sub.add_parser("count", help="count squares of one kind")
    count.add_argument("--kind", choices=KINDS, required=True)
    count.add_argument("--deck-bits", type=int, required=True)
    count.add_argument("--method", choices=("formula", "search", "both"), default="formula")
    count.add_argument("--type-c", action="store_true",
                       help="report only the type-C count, not the whole-deck total")
    count.add_argument("--format", choices=FORMATS, default="text")
    count.set_defaults(handler=cmd_count)

    enum = sub.add_parser("enumerate", help="emit squares one by one")
    enum.add_argument("--kind", choices=KINDS, required=True)
    enum.add_argument("--deck-bits", type=int, required=True)
    enum.add_argument("--type-c", action="store_true",
                      help="enumerate type-C representatives (required)")
    enum.add_argument("--limit", type=int, default=None)
    enum.add_argument("--base4", action="store_true")
    enum.add_argument("--format", choices=FORMATS, default="text")
    enum.set_defaults(handler=cmd_enumerate)

    classify = sub.add_parser("classify", help="orbit classifications and tables")
    classify.add_argument("--scope", required=True,
                          choices=("deck16-semimagic", "deck16-strongly-magic",
                                   "bprime", "distributions", "pairs"))
    classify.add_argument("--deck-bits", type=int, default=None,
                          help="deck for --scope bprime (default 8)")
    classify.add_argument("--full-deck", action="store_true",
                          help="restrict deck16-strongly-magic to distribution 4,4,4,4")
    classify.add_argument("--format", choices=FORMATS, default="text")
    classify.set_defaults(handler=cmd_classify)

    verify = sub.add_parser("verify", help="recompute published values and compare")
    verify.add_argument("--suite", choices=("sequences", "tables", "decomposition", "all"),
                        default="all")
    verify.add_argument("--deck-bits", type=int, default=None,
                        help="deck for the decomposition suite (default 6)")
    verify.set_defaults(handler=cmd_verify)

    check = sub.add_parser("check", help="inspect a square file")
    check.add_argument("input", help="path to a square file, or - for stdin")
    check.add_argument("--deck-bits", type=int, required=True)
    check.add_argument("--base4", action="store_true")
    check.add_argument("--format", choices=FORMATS, default="text")
    check.set_defaults(handler=cmd_check)

    sequence = sub.add_parser("sequence", help="print count sequences by deck size")
    sequence.add_argument("--kind", choices=KINDS, required=True)
    sequence.add_argument("--variant", choices=("total", "type-c", "quotient", "classes"),
                          default="total")
    sequence.add_argument("--max-bits", type=int, default=9)
    sequence.add_argument("--format", choices=FORMATS, default="text")
    sequence.set_defaults(handler=cmd_sequence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
