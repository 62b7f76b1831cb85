"""Command-line driver.

Exit codes: 0 success, 1 usage or configuration error, 2 a mathematical gate
failed (non-dissociate letters, invalid coefficients, uncertified pair).
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .adfamily import BranchSeed, IndistinguishableSeeds, ad_set_within, intersection_bound, letters_for
from .concrete import DEFAULT_CANTOR_CAP, singularity_profile
from .dissociate import enumerate_words, is_dissociate, make_letters
from .dualgroup import DirectSumOrderTwo, IntegerGroup, parse_group
from .riesz import (
    convolve,
    default_family_spec,
    ip_criterion_partial,
    make_spec,
    transform,
    validate_spec,
)
from .spectrum import WitnessParams, natural_spectrum, naturalness_gap, unit_disc_claim, witness_pair

EXIT_OK, EXIT_USAGE, EXIT_GATE = 0, 1, 2
MAX_LEVEL = 12
MAX_MASTER = 100_000


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    group: str | None = None
    master: str = "lacunary base=3 count=40"
    seeds: list = field(default_factory=list)
    L: int = 4
    k_range: list = field(default_factory=lambda: [1, 12])
    n: int = 1
    m: int = 2
    coeff: str = "default"
    z0: list = field(default_factory=lambda: [2 ** -0.5, 2 ** -0.5])
    r: float = 0.1
    samples: int = 10_000
    ip_terms: int = 10_000
    cantor_cap: int = DEFAULT_CANTOR_CAP
    out: str | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        return asdict(self)

    def validate(self) -> None:
        if not 1 <= int(self.L) <= MAX_LEVEL:
            raise UsageError(f"L must lie in [1, {MAX_LEVEL}]")
        if len(self.k_range) != 2 or not 1 <= self.k_range[0] <= self.k_range[1]:
            raise UsageError("k_range must be [lo, hi] with 1 <= lo <= hi")
        if self.k_range[1] > self.cantor_cap:
            raise UsageError(f"k_range exceeds the Cantor level cap {self.cantor_cap}")
        if self.n < 1 or self.m < 1:
            raise UsageError("powers must be >= 1")
        if len(self.z0) != 2:
            raise UsageError("z0 must be [re, im]")
        if self.coeff != "default":
            try:
                float(self.coeff)
            except ValueError:
                raise UsageError(f"coeff must be 'default' or a number, got {self.coeff!r}") from None
        try:
            self.params()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for s in self.seeds:
            BranchSeed.parse(s)
        self.letters()

    def params(self) -> WitnessParams:
        return WitnessParams(complex(*self.z0), float(self.r), int(self.samples), 0, int(self.ip_terms))

    def letters(self):
        """Parse the master letter rule into ``(group, letters)``."""
        rule = self.master.strip()
        opts = dict(re.findall(r"(\w+)=(\S+)", rule))
        head = rule.split()[0] if rule else ""
        if head == "lacunary":
            base, count = int(opts.get("base", 3)), int(opts.get("count", 40))
            if base < 2 or not 1 <= count <= MAX_MASTER:
                raise UsageError("lacunary rule needs base >= 2 and a sane count")
            G = IntegerGroup()
            elements = [G.element(base ** k) for k in range(1, count + 1)]
        elif head == "rademacher":
            count = int(opts.get("count", 24))
            if not 1 <= count <= MAX_MASTER:
                raise UsageError("rademacher rule needs a sane count")
            G = DirectSumOrderTwo()
            elements = [G.basis(i) for i in range(1, count + 1)]
        else:
            text = rule[len("letters"):] if head == "letters" else rule
            try:
                values = [int(v) for v in text.split(",") if v.strip()]
            except ValueError:
                raise UsageError(f"unrecognised master rule {rule!r}") from None
            if not values:
                raise UsageError("empty letter list")
            G = IntegerGroup()
            elements = [G.element(v) for v in values]
        if self.group is not None:
            try:
                declared = parse_group(self.group)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if declared != G:
                raise UsageError(f"master rule lives in {G.label}, config says {declared.label}")
        try:
            return G, make_letters(G, elements)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def branch_seeds(self) -> list[BranchSeed]:
        return [BranchSeed.parse(s) for s in self.seeds]

    def spec(self):
        G, letters = self.letters()
        if self.coeff == "default":
            return default_family_spec(G, letters, level=int(self.L), verify=False)
        a = float(self.coeff)
        return make_spec(G, letters, [a] * len(letters), int(self.L), verify=False)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _k_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("k-range looks like 1..12")
    return [int(lo), int(hi)]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rieszsep", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=["dissociate", "words", "family", "coeffs", "convolve", "profile", "witness", "gap"])
    parser.add_argument("--config", type=Path, help="JSON run configuration; flags override it")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", help="output file (default stdout)")
    parser.add_argument("--format", choices=["json", "csv"])
    parser.add_argument("--group")
    parser.add_argument("--master", help='"lacunary base=3 count=40", "rademacher count=24" or "1,2,3"')
    parser.add_argument("--seeds", help="branch seeds separated by ';'")
    parser.add_argument("--L", type=int)
    parser.add_argument("--k-range", type=_k_range, dest="k_range")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--coeff")
    parser.add_argument("--z0", help="re,im")
    parser.add_argument("--r", type=float)
    parser.add_argument("--samples", type=int)
    return parser


def load_config(args) -> RunConfig:
    data = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    overrides = {
        "group": args.group,
        "master": args.master,
        "L": args.L,
        "k_range": args.k_range,
        "n": args.n,
        "m": args.m,
        "coeff": args.coeff,
        "r": args.r,
        "samples": args.samples,
        "out": args.out,
    }
    if args.seeds is not None:
        overrides["seeds"] = [s for s in args.seeds.split(";") if s.strip()]
    if args.z0 is not None:
        overrides["z0"] = [float(v) for v in args.z0.split(",")]
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return RunConfig.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def cmd_dissociate(cfg: RunConfig, args):
    G, letters = cfg.letters()
    report = is_dissociate(G, letters, cfg.L)
    out = {
        "command": "dissociate",
        "group": G.label,
        "letters": len(letters),
        "L": cfg.L,
        "words": report.n_words,
        "verified": report.verified,
    }
    if not report.verified:
        ce = report.counterexample
        out["counterexample"] = {
            "first": [list(f) for f in ce.first],
            "second": [list(f) for f in ce.second],
            "element": G.to_json(ce.element),
        }
    return _dump(out), EXIT_OK if report.verified else EXIT_GATE


def cmd_words(cfg: RunConfig, args):
    G, letters = cfg.letters()
    report = is_dissociate(G, letters, cfg.L)
    if not report.verified:
        return _dump({"command": "words", "verified": False}), EXIT_GATE
    return _dump(enumerate_words(G, letters, cfg.L).to_json()), EXIT_OK


def _family_members(cfg: RunConfig):
    G, master = cfg.letters()
    members = []
    for seed in cfg.branch_seeds():
        S = ad_set_within(seed, len(master))
        theta, index = letters_for(master, S)
        members.append((seed, S, theta, default_family_spec(G, theta, index, cfg.L, verify=False)))
    return G, members


def cmd_family(cfg: RunConfig, args):
    G, members = _family_members(cfg)
    out = []
    for seed, S, theta, spec in members:
        out.append({
            "seed": str(seed),
            "bits": seed.bits(S.n),
            "codes": list(S.codes),
            "letters": [G.to_json(l.element) for l in theta],
            "coefficients": [spec.coeffs[l].real for l in theta],
        })
    return _dump(out), EXIT_OK


def cmd_coeffs(cfg: RunConfig, args):
    spec = cfg.spec()
    problems = validate_spec(spec)
    if problems:
        return _dump({"command": "coeffs", "violations": problems}), EXIT_GATE
    report = is_dissociate(spec.group, spec.letters, cfg.L)
    if not report.verified:
        return _dump({"command": "coeffs", "verified": False}), EXIT_GATE
    T = transform(spec)
    return _dump({"spec": spec.to_json(), "complete": T.complete, "transform": T.to_json()}), EXIT_OK


def cmd_convolve(cfg: RunConfig, args):
    if len(cfg.seeds) < 2:
        raise UsageError("convolve needs two seeds")
    G, members = _family_members(cfg)
    (_, _, ta, sa), (_, _, tb, sb) = members[:2]
    union = ta + [l for l in tb if l not in set(ta)]
    if not is_dissociate(G, union, cfg.L).verified:
        return _dump({"command": "convolve", "verified": False}), EXIT_GATE
    T = convolve(transform(sa), transform(sb))
    return _dump({"seeds": cfg.seeds[:2], "support_size": len(T), "transform": T.to_json()}), EXIT_OK


def cmd_profile(cfg: RunConfig, args):
    if cfg.n == cfg.m:
        raise UsageError("profile needs distinct powers n and m")
    spec = cfg.spec()
    lo, hi = cfg.k_range
    if hi > len(spec.letters):
        raise UsageError(f"k_range exceeds the {len(spec.letters)} master letters")
    try:
        rows = singularity_profile(spec, range(lo, hi + 1), cfg.n, cfg.m, cap=cfg.cantor_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = [
        {"k": k, "n": cfg.n, "m": cfg.m, "tv_distance": tv, "ip_partial": ip_criterion_partial(spec, k, cfg.n)}
        for k, tv in rows
    ]
    if (args.format or "csv") == "json":
        return _dump(records), EXIT_OK
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["k", "n", "m", "tv_distance", "ip_partial"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue(), EXIT_OK


def _witness_job(job):
    a, b, G, master, L, params = job
    return witness_pair(a, b, G, master, L, params).to_json()


def cmd_witness(cfg: RunConfig, args):
    seeds = cfg.branch_seeds()
    if len(seeds) < 2:
        raise UsageError("witness needs at least two seeds")
    if len(set(seeds)) != len(seeds):
        raise UsageError("duplicate seeds")
    for a, b in itertools.combinations(seeds, 2):
        try:
            intersection_bound(a, b)
        except IndistinguishableSeeds as exc:
            raise UsageError(str(exc)) from None
    G, master = cfg.letters()
    params = WitnessParams(complex(*cfg.z0), float(cfg.r), int(cfg.samples), args.seed, int(cfg.ip_terms))
    jobs = [(a, b, G, master, cfg.L, params) for a, b in itertools.combinations(seeds, 2)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_witness_job, jobs))
    else:
        reports = [_witness_job(j) for j in jobs]
    ok = all(r["conclusion"] == "certified" for r in reports)
    return _dump(reports), EXIT_OK if ok else EXIT_GATE


def cmd_gap(cfg: RunConfig, args):
    spec = cfg.spec()
    if validate_spec(spec):
        return _dump({"command": "gap", "violations": validate_spec(spec)}), EXIT_GATE
    est = natural_spectrum(transform(spec))
    claim = unit_disc_claim(spec, len(spec.letters))
    out = {
        "points": len(est.points),
        "includes_zero": est.includes_zero,
        "real_range": all(z.imag == 0 for z in est.points),
        "naturalness_gap": naturalness_gap(est),
        "hermitian": claim.hermitian,
        "probability": claim.probability,
        "ip_partial": claim.ip_partial,
        "conclusion": claim.conclusion,
    }
    return _dump(out), EXIT_OK


COMMANDS = {
    "dissociate": cmd_dissociate,
    "words": cmd_words,
    "family": cmd_family,
    "coeffs": cmd_coeffs,
    "convolve": cmd_convolve,
    "profile": cmd_profile,
    "witness": cmd_witness,
    "gap": cmd_gap,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = load_config(args)
        text, code = COMMANDS[args.command](cfg, args)
    except (UsageError, ValueError) as exc:
        print(f"rieszsep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
