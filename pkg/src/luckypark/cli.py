"""Command-line front end: simulate parking, evaluate counting formulas,
dump brute-force censuses, verify formulas against the oracle, and emit
sweep tables.

Exit codes: 0 success, 1 verification failures, 2 bad arguments (including
cap violations), 3 simulate called on a non-parking preference vector.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from typing import Optional, Sequence

from . import classical, oracle, vector_counts, vector_outcomes
from .parking import first_failing_car, format_block_outcome, park_vector


class CliError(Exception):
    """Bad command-line input; reported on stderr with exit code 2."""


# --- argument parsing -----------------------------------------------------


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CliError(f"{what} must be comma-separated integers, got {text!r}")
    return values


def parse_weakly_increasing(text: str, what: str) -> tuple[int, ...]:
    values = parse_ints(text, what)
    if not values or values[0] < 1 or any(a > b for a, b in zip(values, values[1:])):
        raise CliError(f"{what} must be weakly increasing positive integers")
    return values


def parse_strictly_increasing(text: str, what: str) -> tuple[int, ...]:
    values = parse_ints(text, what)
    if any(v < 1 for v in values) or any(a >= b for a, b in zip(values, values[1:])):
        raise CliError(f"{what} must be strictly increasing positive integers")
    return values


def parse_range(text: str, what: str) -> list[int]:
    """'3' -> [3]; '1..5' -> [1, 2, 3, 4, 5] (may be empty, never reversed)."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise CliError(f"{what} must be an integer or a lo..hi range, got {text!r}")


# --- simulate ---------------------------------------------------------------


def cmd_simulate(args) -> int:
    u = parse_weakly_increasing(args.u, "--u")
    prefs = parse_ints(args.prefs, "--prefs")
    if len(prefs) != len(u) or any(p < 1 for p in prefs):
        raise CliError("--prefs needs one positive preference per car")
    parked = park_vector(u, prefs)
    if parked is None:
        car = first_failing_car(u, prefs)
        print(f"car {car} cannot park: no spot at or past its preference "
              f"{prefs[car - 1]} is free", file=sys.stderr)
        return 3
    blocks, lucky = parked
    if args.json:
        doc = {
            "u": list(u),
            "prefs": list(prefs),
            "outcome": [list(b) if b is not None else None for b in blocks],
            "lucky": sorted(lucky),
        }
        print(json.dumps(doc))
    else:
        shown = ",".join(map(str, sorted(lucky))) if lucky else "-"
        print(f"{format_block_outcome(blocks)} | lucky: {shown}")
    return 0


# --- count ------------------------------------------------------------------

# selector -> (argument names in output order, evaluation function)
COUNT_SELECTORS = {
    "outcomes-fixed-I": (
        ("n", "I"),
        lambda a: classical.count_outcomes_fixed_lucky(a["n"], a["I"]),
    ),
    "outcomes-mn-fixed-I": (
        ("m", "n", "I"),
        lambda a: classical.count_outcomes_mn_fixed_lucky(a["m"], a["n"], a["I"]),
    ),
    "outcomes-mn-k": (
        ("m", "n", "k"),
        lambda a: classical.count_outcomes_mn_k_lucky(a["m"], a["n"], a["k"]),
    ),
    "outcomes-completion-k": (
        ("n", "s", "k"),
        lambda a: vector_outcomes.count_outcomes_completion_k_lucky(
            a["n"], a["s"], a["k"]
        ),
    ),
    "c1": (
        ("n", "I"),
        lambda a: vector_outcomes.count_outcomes_spot1_blocked(a["n"], a["I"]),
    ),
    "c2": (
        ("n", "I"),
        lambda a: vector_outcomes.count_outcomes_spot2_blocked(a["n"], a["I"]),
    ),
    "c3": (
        ("n", "I"),
        lambda a: vector_outcomes.count_outcomes_spot3_blocked(a["n"], a["I"]),
    ),
    "outcomes-lucky-spots": (
        ("u", "L"),
        lambda a: vector_outcomes.count_outcomes_lucky_spots(a["u"], a["L"]),
    ),
    "upf-fixed-I": (
        ("u", "I"),
        lambda a: vector_counts.count_upfs_fixed_lucky(a["u"], a["I"]),
    ),
    "upf-k": (
        ("u", "k"),
        lambda a: vector_counts.count_upfs_k_lucky(a["u"], a["k"]),
    ),
    "upf-const-jump": (
        ("n", "i", "j", "k"),
        lambda a: vector_counts.count_upfs_const_then_jump(
            a["n"], a["i"], a["j"], a["k"]
        ),
    ),
}


def _collect_count_args(args, needed: tuple[str, ...]) -> dict:
    parsers = {
        "n": lambda: args.n,
        "m": lambda: args.m,
        "k": lambda: args.k,
        "i": lambda: args.i,
        "j": lambda: args.j,
        "u": lambda: parse_weakly_increasing(args.u, "--u"),
        "s": lambda: parse_strictly_increasing(args.s, "--s"),
        "I": lambda: frozenset(parse_strictly_increasing(args.I, "--I")),
        "L": lambda: frozenset(parse_strictly_increasing(args.L, "--L")),
    }
    given = {
        name
        for name in parsers
        if getattr(args, name) is not None
    }
    needed_set = set(needed)
    optional = {"s"} & needed_set  # empty forbidden set means a plain street
    missing = needed_set - given - optional
    extra = given - needed_set
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing --" + ", --".join(sorted(missing)))
        if extra:
            parts.append("unexpected --" + ", --".join(sorted(extra)))
        raise CliError(f"selector arguments do not match: {'; '.join(parts)}")
    out = {}
    for name in needed:
        if name == "s" and args.s is None:
            out[name] = ()
        else:
            out[name] = parsers[name]()
    return out


def cmd_count(args) -> int:
    if args.selector not in COUNT_SELECTORS:
        raise CliError(f"unknown selector {args.selector!r}")
    needed, evaluate = COUNT_SELECTORS[args.selector]
    values = _collect_count_args(args, needed)
    result = evaluate(values)  # ValueError -> exit 2 via main
    if args.json:
        doc = {"selector": args.selector}
        for name in needed:
            v = values[name]
            doc[name] = sorted(v) if isinstance(v, frozenset) else (
                list(v) if isinstance(v, tuple) else v
            )
        doc["value"] = result
        print(json.dumps(doc))
    else:
        print(result)
    return 0


# --- brute ------------------------------------------------------------------


def cmd_brute(args) -> int:
    chosen = [name for name in ("u", "s", "m") if getattr(args, name) is not None]
    if args.u is not None and len(chosen) > 1:
        raise CliError("--u cannot be combined with --m or --s")
    if args.m is not None and args.s is not None:
        raise CliError("--m cannot be combined with --s")
    if args.u is not None:
        u = parse_weakly_increasing(args.u, "--u")
        census = oracle.census_vector(u, cap=args.cap, workers=args.workers)
    elif args.s is not None:
        if args.n is None:
            raise CliError("completion census needs --n")
        s = parse_strictly_increasing(args.s, "--s")
        census = oracle.census_completion(args.n, s, cap=args.cap, workers=args.workers)
    elif args.m is not None:
        if args.n is None:
            raise CliError("(m, n) census needs --n")
        census = oracle.census_mn(args.m, args.n, cap=args.cap, workers=args.workers)
    else:
        if args.n is None:
            raise CliError("classical census needs --n")
        census = oracle.census_classical(args.n, cap=args.cap, workers=args.workers)
    print(oracle.census_to_json(census))
    return 0


# --- verify -----------------------------------------------------------------


def _subsets(universe: Sequence[int]):
    items = sorted(universe)
    for size in range(len(items) + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


def _format_lucky(lucky) -> str:
    return "{" + ",".join(map(str, sorted(lucky))) + "}"


def _check_fixed_lucky_outcomes(n, formula, census):
    """Compare a fixed-lucky-set outcome-count formula against the oracle's
    distinct-outcome sets over every lucky set."""
    bad = []
    for lucky in _subsets(range(1, n + 1)):
        want = len(census.outcomes_for(lucky))
        got = formula(lucky)
        if got != want:
            bad.append(f"I={_format_lucky(lucky)} formula={got} oracle={want}")
    detail = f"({2 ** n} lucky sets)" if not bad else "; ".join(bad)
    return not bad, detail


def _verify_instances(args):
    """Build (label, search-space, run) triples for the requested sweep."""
    sel = args.selector
    instances = []

    def add(label, space, run):
        instances.append((label, space, run))

    def n_values(default_lo=1):
        if args.n is not None:
            return [args.n]
        if args.n_max is not None:
            return list(range(default_lo, args.n_max + 1))
        raise CliError(f"{sel} needs --n or --n-max")

    if sel == "outcomes-fixed-I":
        for n in n_values():
            def run(n=n):
                census = oracle.census_classical(n, cap=args.cap, workers=args.workers)
                return _check_fixed_lucky_outcomes(
                    n, lambda I: classical.count_outcomes_fixed_lucky(n, I), census
                )
            add(f"outcomes-fixed-I n={n}", n**n, run)
    elif sel in ("outcomes-mn-fixed-I", "outcomes-mn-k"):
        if args.m is not None:
            m_values = [args.m]
        elif args.m_max is not None:
            m_values = list(range(1, args.m_max + 1))
        else:
            raise CliError(f"{sel} needs --m or --m-max")
        pairs = [
            (m, n)
            for m in m_values
            for n in n_values()
            if m <= n
        ]
        if sel == "outcomes-mn-fixed-I":
            for m, n in pairs:
                def run(m=m, n=n):
                    census = oracle.census_mn(m, n, cap=args.cap, workers=args.workers)
                    bad = []
                    for lucky in _subsets(range(1, m + 1)):
                        want = len(census.outcomes_for(lucky))
                        got = classical.count_outcomes_mn_fixed_lucky(m, n, lucky)
                        if got != want:
                            bad.append(
                                f"I={_format_lucky(lucky)} formula={got} oracle={want}"
                            )
                    detail = f"({2 ** m} lucky sets)" if not bad else "; ".join(bad)
                    return not bad, detail
                add(f"outcomes-mn-fixed-I m={m} n={n}", n**m, run)
        else:
            for m, n in pairs:
                def run(m=m, n=n):
                    census = oracle.census_mn(m, n, cap=args.cap, workers=args.workers)
                    bad, values, notes = [], [], []
                    for k in range(1, m + 1):
                        want = len(census.k_outcomes(k))
                        got = classical.count_outcomes_mn_k_lucky(m, n, k)
                        alt = classical.count_outcomes_mn_k_lucky_variant(m, n, k)
                        values.append(f"k={k}:{got}")
                        if got != want:
                            bad.append(f"k={k} formula={got} oracle={want}")
                        if alt != got:
                            side = "statement" if got == want else (
                                "variant" if alt == want else "neither"
                            )
                            notes.append(
                                f"k={k} statement={got} variant={alt} oracle={want}"
                                f" -> {side} matches"
                            )
                    detail = ", ".join(values) if not bad else "; ".join(bad)
                    if notes:
                        detail += " [binomial variants differ: " + "; ".join(notes) + "]"
                    return not bad, detail
                add(f"outcomes-mn-k m={m} n={n}", n**m, run)
    elif sel == "outcomes-completion-k":
        if args.n is None:
            raise CliError("outcomes-completion-k needs --n")
        n = args.n
        s = parse_strictly_increasing(args.s, "--s") if args.s is not None else ()
        street = oracle.completion_street(n, s)
        def run(n=n, s=s, street=street):
            census = oracle.census_vector(street, cap=args.cap, workers=args.workers)
            bad, values = [], []
            for k in range(0, n + 1):
                want = len(census.k_outcomes(k))
                got = vector_outcomes.count_outcomes_completion_k_lucky(n, s, k)
                values.append(f"k={k}:{got}")
                if got != want:
                    bad.append(f"k={k} formula={got} oracle={want}")
            return not bad, ", ".join(values) if not bad else "; ".join(bad)
        add(f"outcomes-completion-k n={n} s={','.join(map(str, s)) or '()'}",
            street.max_spot**n, run)
    elif sel in ("c1", "c2", "c3"):
        spot = int(sel[1])
        formula = {
            1: vector_outcomes.count_outcomes_spot1_blocked,
            2: vector_outcomes.count_outcomes_spot2_blocked,
            3: vector_outcomes.count_outcomes_spot3_blocked,
        }[spot]
        lo = 2 if spot == 3 else 1
        for n in n_values(default_lo=lo):
            if n < lo:
                raise CliError(f"{sel} needs n >= {lo}")
            u = tuple(x for x in range(1, n + 2) if x != spot)
            def run(n=n, u=u):
                census = oracle.census_vector(u, cap=args.cap, workers=args.workers)
                return _check_fixed_lucky_outcomes(n, lambda I: formula(n, I), census)
            add(f"{sel} n={n}", (n + 1) ** n, run)
    elif sel == "outcomes-lucky-spots":
        if args.u is None:
            raise CliError("outcomes-lucky-spots needs --u")
        u = parse_weakly_increasing(args.u, "--u")
        def run(u=u):
            spot_census = oracle.census_lucky_spots(u, cap=args.cap)
            bad = []
            for spots in _subsets(set(u)):
                want = len(spot_census.get(spots, set()))
                got = vector_outcomes.count_outcomes_lucky_spots(u, spots)
                if got != want:
                    bad.append(f"L={_format_lucky(spots)} formula={got} oracle={want}")
            detail = f"({2 ** len(set(u))} spot sets)" if not bad else "; ".join(bad)
            return not bad, detail
        add(f"outcomes-lucky-spots u={','.join(map(str, u))}", max(u) ** len(u), run)
    elif sel in ("upf-fixed-I", "upf-k"):
        if args.u is None:
            raise CliError(f"{sel} needs --u")
        u = parse_weakly_increasing(args.u, "--u")
        n = len(u)
        if sel == "upf-fixed-I":
            def run(u=u, n=n):
                census = oracle.census_vector(u, cap=args.cap, workers=args.workers)
                bad = []
                for lucky in _subsets(range(1, n + 1)):
                    want = census.functions_for(lucky)
                    got = vector_counts.count_upfs_fixed_lucky(u, lucky)
                    if got != want:
                        bad.append(
                            f"I={_format_lucky(lucky)} formula={got} oracle={want}"
                        )
                detail = f"({2 ** n} lucky sets)" if not bad else "; ".join(bad)
                return not bad, detail
        else:
            def run(u=u, n=n):
                census = oracle.census_vector(u, cap=args.cap, workers=args.workers)
                bad, values = [], []
                for k in range(0, n + 1):
                    want = census.k_functions(k)
                    got = vector_counts.count_upfs_k_lucky(u, k)
                    values.append(f"k={k}:{got}")
                    if got != want:
                        bad.append(f"k={k} formula={got} oracle={want}")
                return not bad, ", ".join(values) if not bad else "; ".join(bad)
        add(f"{sel} u={','.join(map(str, u))}", max(u) ** n, run)
    elif sel == "upf-const-jump":
        if args.i is None or args.j is None:
            raise CliError("upf-const-jump needs --i and --j")
        i, j = args.i, args.j
        if not 1 <= i < j:
            raise CliError("need 1 <= i < j")
        for n in n_values():
            u = (i,) * (n - 1) + (j,)
            def run(n=n, u=u, i=i, j=j):
                census = oracle.census_vector(u, cap=args.cap, workers=args.workers)
                bad, values = [], []
                for k in range(0, n + 1):
                    want = census.k_functions(k)
                    got = vector_counts.count_upfs_const_then_jump(n, i, j, k)
                    triple = vector_counts.count_upfs_k_lucky(u, k)
                    values.append(f"k={k}:{got}")
                    if got != want or triple != want:
                        bad.append(
                            f"k={k} closed={got} spot-sum={triple} oracle={want}"
                        )
                return not bad, ", ".join(values) if not bad else "; ".join(bad)
            add(f"upf-const-jump i={i} j={j} n={n}", max(u) ** n, run)
    else:
        raise CliError(f"unknown selector {sel!r}")
    return instances


def cmd_verify(args) -> int:
    instances = _verify_instances(args)
    cap = oracle.resolve_cap(args.cap)
    for label, space, _ in instances:
        if space > cap:
            raise CliError(
                f"instance {label} needs {space} preference vectors, over the cap {cap}"
            )
    failures = 0
    for label, _, run in instances:
        passed, detail = run()
        status = "PASS" if passed else "FAIL"
        failures += 0 if passed else 1
        print(f"{status} {label}: {detail}" if detail else f"{status} {label}")
    total = len(instances)
    print(f"summary: {total} instance(s), {total - failures} passed, {failures} failed")
    return 1 if failures else 0


# --- table ------------------------------------------------------------------


def _parse_k_range(text: Optional[str], n: int) -> list[int]:
    if text is None or text == "all":
        return list(range(0, n + 1))
    return parse_range(text, "--k")


class _CensusCache:
    def __init__(self, cap, workers):
        self.cap = cap
        self.workers = workers
        self._store = {}

    def vector(self, u) -> oracle.Census:
        if ("v", u) not in self._store:
            self._store[("v", u)] = oracle.census_vector(
                u, cap=self.cap, workers=self.workers
            )
        return self._store[("v", u)]

    def mn(self, m, n) -> oracle.Census:
        if ("mn", m, n) not in self._store:
            self._store[("mn", m, n)] = oracle.census_mn(
                m, n, cap=self.cap, workers=self.workers
            )
        return self._store[("mn", m, n)]


def _table_rows(args, censuses: _CensusCache):
    sel = args.formula
    with_oracle = args.with_oracle
    rows = []

    def emit(inputs: list, value: int, want: Optional[int]):
        row = inputs + [value]
        if with_oracle:
            row += [want, value == want]
        rows.append(row)

    if sel == "upf-const-jump":
        if args.i is None or args.j is None or args.n is None:
            raise CliError("upf-const-jump table needs --i, --j, --n")
        i, j = args.i, args.j
        columns = ["i", "j", "n", "k", "value"]
        for n in parse_range(args.n, "--n"):
            u = (i,) * (n - 1) + (j,)
            for k in _parse_k_range(args.k, n):
                value = vector_counts.count_upfs_const_then_jump(n, i, j, k)
                want = censuses.vector(u).k_functions(k) if with_oracle else None
                emit([i, j, n, k], value, want)
    elif sel in ("c1", "c2", "c3", "outcomes-fixed-I"):
        if args.n is None or args.I_prefix_k is None:
            raise CliError(f"{sel} table needs --n and --I-prefix-k")
        spot = None if sel == "outcomes-fixed-I" else int(sel[1])
        columns = ["n", "prefix_k", "I", "value"]
        for n in parse_range(args.n, "--n"):
            if args.I_prefix_k == "all":
                k_range = list(range(1, n + 1))
            else:
                k_range = [k for k in parse_range(args.I_prefix_k, "--I-prefix-k")
                           if k <= n]
            for k in k_range:
                lucky = frozenset(range(1, k + 1))
                if spot is None:
                    value = classical.count_outcomes_fixed_lucky(n, lucky)
                    census_u = tuple(range(1, n + 1))
                else:
                    formula = {
                        1: vector_outcomes.count_outcomes_spot1_blocked,
                        2: vector_outcomes.count_outcomes_spot2_blocked,
                        3: vector_outcomes.count_outcomes_spot3_blocked,
                    }[spot]
                    if spot == 3 and n < 2:
                        continue
                    value = formula(n, lucky)
                    census_u = tuple(x for x in range(1, n + 2) if x != spot)
                want = (
                    len(censuses.vector(census_u).outcomes_for(lucky))
                    if with_oracle
                    else None
                )
                emit([n, k, ",".join(map(str, sorted(lucky)))], value, want)
    elif sel == "upf-k":
        if args.u is None:
            raise CliError("upf-k table needs --u")
        u = parse_weakly_increasing(args.u, "--u")
        columns = ["u", "k", "value"]
        for k in _parse_k_range(args.k, len(u)):
            value = vector_counts.count_upfs_k_lucky(u, k)
            want = censuses.vector(u).k_functions(k) if with_oracle else None
            emit([",".join(map(str, u)), k], value, want)
    elif sel == "outcomes-mn-k":
        if args.m is None or args.n is None:
            raise CliError("outcomes-mn-k table needs --m and --n")
        m = args.m
        columns = ["m", "n", "k", "value"]
        for n in parse_range(args.n, "--n"):
            if n < m:
                continue
            for k in _parse_k_range(args.k, m):
                if k < 1:
                    continue
                value = classical.count_outcomes_mn_k_lucky(m, n, k)
                want = len(censuses.mn(m, n).k_outcomes(k)) if with_oracle else None
                emit([m, n, k], value, want)
    elif sel == "outcomes-completion-k":
        if args.n is None:
            raise CliError("outcomes-completion-k table needs --n")
        s = parse_strictly_increasing(args.s, "--s") if args.s is not None else ()
        columns = ["n", "s", "k", "value"]
        for n in parse_range(args.n, "--n"):
            street = oracle.completion_street(n, s)
            for k in _parse_k_range(args.k, n):
                value = vector_outcomes.count_outcomes_completion_k_lucky(n, s, k)
                want = (
                    len(censuses.vector(street.u).k_outcomes(k))
                    if with_oracle
                    else None
                )
                emit([n, ",".join(map(str, s)), k], value, want)
    else:
        raise CliError(f"unknown table formula {sel!r}")

    if with_oracle:
        columns = columns + ["oracle", "match"]
    return columns, rows


def cmd_table(args) -> int:
    censuses = _CensusCache(args.cap, args.workers)
    columns, rows = _table_rows(args, censuses)
    if args.json:
        print(json.dumps({"columns": columns, "rows": rows}))
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                ["true" if v is True else "false" if v is False else v for v in row]
            )
        sys.stdout.write(buffer.getvalue())
    return 0


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="luckypark",
        description="Lucky-car statistics of parking functions: simulate, "
        "count, brute-force, verify, tabulate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="park a preference vector on a capacity street")
    p_sim.add_argument("--u", required=True, help="capacity vector, e.g. 2,2,3,3")
    p_sim.add_argument("--prefs", required=True, help="preferences, e.g. 1,3,3,1")
    p_sim.add_argument("--json", action="store_true")
    p_sim.set_defaults(func=cmd_simulate)

    p_count = sub.add_parser("count", help="evaluate one counting formula")
    p_count.add_argument("selector", help="|".join(COUNT_SELECTORS))
    p_count.add_argument("--n", type=int)
    p_count.add_argument("--m", type=int)
    p_count.add_argument("--k", type=int)
    p_count.add_argument("--i", type=int)
    p_count.add_argument("--j", type=int)
    p_count.add_argument("--u")
    p_count.add_argument("--s")
    p_count.add_argument("--I")
    p_count.add_argument("--L")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_brute = sub.add_parser("brute", help="emit an exhaustive census as canonical JSON")
    p_brute.add_argument("--n", type=int, help="cars (classical / mn / completion)")
    p_brute.add_argument("--m", type=int, help="cars for an (m, n) street")
    p_brute.add_argument("--u", help="capacity vector")
    p_brute.add_argument("--s", help="forbidden spots for a completion street")
    p_brute.add_argument("--workers", type=int, default=1)
    p_brute.add_argument("--cap", type=int, default=None)
    p_brute.set_defaults(func=cmd_brute)

    p_verify = sub.add_parser("verify", help="check formulas against the brute-force oracle")
    p_verify.add_argument("selector", help="|".join(COUNT_SELECTORS))
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--n-max", dest="n_max", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--m-max", dest="m_max", type=int)
    p_verify.add_argument("--i", type=int)
    p_verify.add_argument("--j", type=int)
    p_verify.add_argument("--u")
    p_verify.add_argument("--s")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--cap", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="emit a sweep table as CSV or JSON")
    p_table.add_argument("--formula", required=True)
    p_table.add_argument("--n", help="int or lo..hi")
    p_table.add_argument("--m", type=int)
    p_table.add_argument("--k", help="int, lo..hi, or 'all'")
    p_table.add_argument("--i", type=int)
    p_table.add_argument("--j", type=int)
    p_table.add_argument("--u")
    p_table.add_argument("--s")
    p_table.add_argument("--I-prefix-k", dest="I_prefix_k", help="int, lo..hi, or 'all'")
    p_table.add_argument("--with-oracle", dest="with_oracle", action="store_true")
    p_table.add_argument("--json", action="store_true")
    p_table.add_argument("--workers", type=int, default=1)
    p_table.add_argument("--cap", type=int, default=None)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CliError, ValueError, oracle.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
