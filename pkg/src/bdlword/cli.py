"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 ambiguous request.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import numpy as np

from . import bdl, fixtures, render
from .fixedpoint import Window, generate_window, is_prefix_of_fixed_point, parikh_path
from .morphimage import hyperplane_basis, image_of_fixed_point, transported_hyperplane
from .spectral import DEFAULT_TOL, candidate_normal_space, eigen_classify, integer_direction
from .substitution import (SpecError, find_seed_pairs, is_primitive, parse_morphism,
                           parse_substitution)
from .wordcore import Alphabet, AlphabetError

EXIT_OK, EXIT_INVALID, EXIT_AMBIGUOUS = 0, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def load_substitution(path: str):
    try:
        return parse_substitution(_read(path))
    except (SpecError, AlphabetError) as exc:
        raise CliError(f"{path}: invalid substitution: {exc}") from None


def load_morphism(path: str):
    try:
        return parse_morphism(_read(path))
    except (SpecError, AlphabetError) as exc:
        raise CliError(f"{path}: invalid morphism: {exc}") from None


def parse_vector(text: str, d: int, what: str = "normal") -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != d:
        raise CliError(f"--{what} needs {d} comma-separated components, got {len(parts)}")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise CliError(f"--{what}: cannot parse {text!r}") from None
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def parse_seed_pair(s, text: str | None):
    if text is None:
        return None
    try:
        k, a, b = [p.strip() for p in text.split(",")]
        k = int(k)
    except ValueError:
        raise CliError("--seed-pair expects k,a,b") from None
    for seed in find_seed_pairs(s, k):
        if (seed.power, seed.a, seed.b) == (k, a, b):
            return seed
    raise CliError(f"({k}, {a}, {b}) is not a seed pair of this substitution")


def _nonzero(f) -> None:
    if all(x == 0 for x in f):
        raise CliError("the zero vector is not a hyperplane normal")


def auto_normal(M, tol: float):
    """Integer normal when possible, else a float unit vector."""
    space = candidate_normal_space(M, tol)
    if space.dim != 1:
        listing = "\n".join("  " + ", ".join(f"{x:.12g}" for x in b) for b in space.basis) or "  (empty)"
        raise CliError(f"candidate normal space has dimension {space.dim}; pass --normal explicitly. "
                       f"Basis:\n{listing}", EXIT_AMBIGUOUS)
    if space.exact_basis:
        return space.exact_basis[0]
    ints = integer_direction(space.basis[0])
    return ints if ints is not None else tuple(float(x) for x in space.basis[0])


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- subcommands --------------------------------------------------------------

def cmd_validate(args) -> int:
    s = load_substitution(args.spec)
    seeds = find_seed_pairs(s, 2 * s.d)
    prim = is_primitive(s.incidence)
    lines = [f"valid substitution over {{{', '.join(s.alphabet.letters)}}}"]
    lines += [f"  {a} -> {img}" for a, img in s.as_dict().items()]
    lines.append("incidence matrix:")
    lines += ["  " + row for row in str(s.incidence).splitlines()]
    lines.append(f"primitive: {'yes' if prim else 'no'}")
    lines.append(f"seed pairs up to power {2 * s.d}: " + (", ".join(map(str, seeds)) or "none"))
    payload = {"valid": True, "primitive": prim, "incidence": s.incidence.tolist(),
               "seed_pairs": [{"power": x.power, "a": x.a, "b": x.b} for x in seeds]}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    s = load_substitution(args.spec)
    rep = eigen_classify(s.incidence, args.tol)
    _emit(args, rep.table(), rep.as_dict())
    return EXIT_OK


def cmd_classify(args) -> int:
    s = load_substitution(args.spec)
    v = bdl.classify(s, args.tol)
    _emit(args, f"{v}\n{v.spectrum.table()}", v.as_dict())
    return EXIT_OK


def _resolve_normal(args, s):
    if args.normal in (None, "auto"):
        return auto_normal(s.incidence, args.tol)
    f = parse_vector(args.normal, s.d)
    _nonzero(f)
    return f


def cmd_scan(args) -> int:
    s = load_substitution(args.spec)
    seed = parse_seed_pair(s, args.seed_pair)
    f = _resolve_normal(args, s)
    path = parikh_path(generate_window(s, seed, args.window, args.window))
    report = bdl.scan_path(path, f, args.window)
    payload = report.as_dict()
    text = str(report)
    if args.factor_samples:
        samples = bdl.sample_factors(path, args.factor_samples, args.factor_length, args.seed)
        fc = bdl.factor_functional_bound_check(f, samples, path)
        payload["factors"] = {"samples": args.factor_samples, "max": str(fc.max_factor),
                              "within_twice_prefix_bound": fc.within_twice_prefix_bound}
        text += (f"\nmax |f.Psi(w)| over {args.factor_samples} sampled factors: {fc.max_factor} "
                 f"(<= 2 x prefix max: {fc.within_twice_prefix_bound})")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            render.write_scan_csv(report, fh)
    _emit(args, text, payload)
    return EXIT_OK


def _window_from_text(text: str, alphabet: str | None) -> Window:
    letters = alphabet if alphabet else "".join(sorted(set(text) - {"|"}))
    try:
        return Window.parse(Alphabet(letters), text)
    except AlphabetError as exc:
        raise CliError(f"--word: {exc}") from None


def cmd_represent(args) -> int:
    if args.word:
        window = _window_from_text(args.word, args.alphabet)
        s = None
    elif args.spec:
        s = load_substitution(args.spec)
        window = generate_window(s, parse_seed_pair(s, args.seed_pair), args.window, args.window)
    else:
        raise CliError("represent needs a substitution spec or --word")
    path = parikh_path(window)
    d = window.alphabet.d
    if args.lengths:
        lengths = parse_vector(args.lengths, d, "lengths")
        if any(x <= 0 for x in lengths):
            raise CliError("--lengths must be positive")
        eta = Fraction(args.eta) if args.eta else None
        rep = bdl.representation_from_lengths(lengths, path, eta)
    else:
        if args.normal in (None, "auto"):
            if s is None:
                raise CliError("--normal auto needs a substitution spec")
            f = auto_normal(s.incidence, args.tol)
        else:
            f = parse_vector(args.normal, d)
            _nonzero(f)
        h = np.array([float(x) for x in f])
        try:
            rep = bdl.build_representation(h / np.linalg.norm(h), path, args.tol)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    dev = bdl.deviation_series(rep)
    dmax = max(dev) if len(dev) else 0
    lines = [f"lengths: ({', '.join(str(l) for l in rep.lengths)})",
             f"eta: {rep.eta}",
             f"non-trivial: {rep.nontrivial}",
             f"points: n in [{-path.n_left}, {path.n_right}]"]
    for n in range(max(-3, -path.n_left), min(4, path.n_right + 1)):
        lines.append(f"  x_{n} = {rep.x(n)}")
    lines.append(f"max |x_n - eta n|: {dmax}")
    payload = {"lengths": [str(l) for l in rep.lengths], "eta": str(rep.eta),
               "nontrivial": rep.nontrivial, "max_deviation": str(dmax)}
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            render.write_representation_csv(rep, fh)
    if args.svg:
        count = min(args.svg_gaps, len(window))
        first = max(-path.n_left, -(count // 2))
        first = min(first, path.n_right - count)
        letters = "".join(window.letter(n) for n in range(first, first + count))
        Path(args.svg).write_text(render.representation_svg(rep, letters, first, args.svg_width, args.svg_height))
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_image(args) -> int:
    s = load_substitution(args.spec)
    phi = load_morphism(args.morphism)
    if phi.source != s.alphabet:
        raise CliError("morphism source alphabet differs from the substitution alphabet")
    seed = parse_seed_pair(s, args.seed_pair)
    img = image_of_fixed_point(phi, s, seed, args.window, args.window)
    path = parikh_path(img)
    db = phi.target.d
    normal = args.normal or "auto"
    if normal.startswith("grid:"):
        radius = int(normal[5:])
        reports = []
        for f in product(range(-radius, radius + 1), repeat=db):
            if any(f):
                reports.append(bdl.scan_path(path, f, args.window))
        growing = sum(r.verdict is bdl.Growth.GROWING for r in reports)
        smallest = min(reports, key=lambda r: r.max_abs)
        lines = [f"grid directions: {len(reports)}",
                 f"GROWING: {growing}",
                 f"smallest max: {smallest.max_abs} at normal {smallest.normal} ({smallest.verdict})"]
        payload = {"directions": len(reports), "growing": growing,
                   "smallest_max": int(smallest.max_abs), "smallest_normal": list(smallest.normal),
                   "smallest_verdict": str(smallest.verdict)}
        _emit(args, "\n".join(lines), payload)
        return EXIT_OK
    if normal == "auto":
        f_src = auto_normal(s.incidence, args.tol)
        try:
            hp = transported_hyperplane(phi.incidence, hyperplane_basis(f_src), db, args.tol)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        ints = integer_direction(hp.normal)
        f = ints if ints is not None else tuple(float(x) for x in hp.normal)
    else:
        f = parse_vector(normal, db)
        _nonzero(f)
    report = bdl.scan_path(path, f, args.window)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            render.write_scan_csv(report, fh)
    _emit(args, str(report), report.as_dict())
    return EXIT_OK


def cmd_window(args) -> int:
    s = load_substitution(args.spec)
    w = generate_window(s, parse_seed_pair(s, args.seed_pair), args.left, args.right)
    print(w.dump())
    return EXIT_OK


def cmd_fk_family(args) -> int:
    k = args.k
    if k < 0:
        raise CliError("--k must be >= 0")
    fk = bdl.fk_build(k, expand=k <= 4)
    lines = [f"k = {k}",
             f"Psi(F_k) = {fk.parikh.counts} (length {fk.length})",
             f"(3,-1,0) . Psi(F_k), matrix powers: {fk.value}"]
    payload = {"k": k, "parikh": list(fk.parikh.counts), "value_matrix": fk.value}
    if fk.word is not None:
        from .wordcore import parikh
        direct = parikh(fk.word).dot(fixtures.PSI_UNIT_NORMAL)
        lines.append(f"(3,-1,0) . Psi(F_k), expanded word: {direct}")
        payload["value_word"] = direct
        if k <= 3:
            ok = is_prefix_of_fixed_point(fixtures.PSI_UNIT, None, fk.word)
            lines.append(f"F_k is a prefix of the fixed point: {ok}")
            payload["prefix"] = ok
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bdlword", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--seed", type=int, default=0, help="random seed for sampling")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", parents=[common], help="check a substitution spec")
    q.add_argument("spec")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("spectrum", parents=[common], help="characteristic polynomial and eigenvalue classes")
    q.add_argument("spec")
    q.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("classify", parents=[common], help="BDL verdict from the spectrum")
    q.add_argument("spec")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("scan", parents=[common], help="scan f . Psi_n for boundedness")
    q.add_argument("spec")
    q.add_argument("--normal", default="auto")
    q.add_argument("--window", type=int, default=100000)
    q.add_argument("--seed-pair")
    q.add_argument("--csv")
    q.add_argument("--factor-samples", type=int, default=0)
    q.add_argument("--factor-length", type=int, default=1000)
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("represent", parents=[common], help="geometric representation and its deviations")
    q.add_argument("spec", nargs="?")
    q.add_argument("--word", help="explicit window such as 'CBCBCB|CBACC'")
    q.add_argument("--alphabet", help="letter order for --word")
    q.add_argument("--normal", default=None)
    q.add_argument("--lengths")
    q.add_argument("--eta")
    q.add_argument("--window", type=int, default=1000)
    q.add_argument("--seed-pair")
    q.add_argument("--csv")
    q.add_argument("--svg")
    q.add_argument("--svg-gaps", type=int, default=16)
    q.add_argument("--svg-width", type=int, default=900)
    q.add_argument("--svg-height", type=int, default=240)
    q.set_defaults(func=cmd_represent)

    q = sub.add_parser("image", parents=[common], help="scan the image of the fixed point under a morphism")
    q.add_argument("spec")
    q.add_argument("morphism")
    q.add_argument("--normal", default="auto", help="auto, v1,...,vd or grid:R")
    q.add_argument("--window", type=int, default=100000)
    q.add_argument("--seed-pair")
    q.add_argument("--csv")
    q.set_defaults(func=cmd_image)

    q = sub.add_parser("window", parents=[common], help="dump letters around the delimiter")
    q.add_argument("spec")
    q.add_argument("--left", type=int, default=20)
    q.add_argument("--right", type=int, default=20)
    q.add_argument("--seed-pair")
    q.set_defaults(func=cmd_window)

    q = sub.add_parser("fk-family", parents=[common], help="the F_k prefix family")
    q.add_argument("--k", type=int, default=3)
    q.set_defaults(func=cmd_fk_family)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1) <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INVALID
    for name in ("window", "left", "right"):
        if getattr(args, name, 0) < 0:
            print(f"error: --{name} must be non-negative", file=sys.stderr)
            return EXIT_INVALID
    if args.command == "scan" and args.window < 2:
        print("error: --window must be at least 2", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
