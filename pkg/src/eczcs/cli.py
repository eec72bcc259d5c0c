"""Command-line surface: construct, verify, profile, train, simulate.

Every run that writes an output also writes ``<out>.manifest.json``
recording the command, its full parameter set, the tool version, the
master seed, and digests of the input files; re-running a manifest's
command reproduces the outputs bit for bit.

Exit codes: 0 success (verification passed where applicable), 1 a
requested check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .construct import (
    SeedVerificationError,
    catalog_entry,
    seed_catalog,
    theorem2_construct,
)
from .correlation import (
    profile_accf,
    profile_cross_channel,
    profile_pccf,
    profile_set_corr,
)
from .gbf import PartitionSpec, lemma2_ccc, theorem3_construct, theorem3_zcz_width
from .sequences import (
    Family,
    family_from_json,
    family_to_json,
    format_family_text,
    parse_family_text,
)
from .simulate import (
    SimConfig,
    baseline_random_binary,
    baseline_zadoff_chu,
    monte_carlo_mse,
)
from .training import (
    GSMConfig,
    build_training_matrix,
    check_design_criterion,
    training_matrix_meta,
    training_matrix_to_csv,
)
from .verify import (
    check_ccc,
    check_eczcs,
    check_mocs,
    check_szccs,
    check_zccs,
    check_zcz_set,
    measure_zcz_width,
)

THEOREM3_PRESETS = {
    # byte-reproduces the shipped eczcs_4x2x32 fixture
    "eczcs-4-2-32-8": {
        "m": 5,
        "q": 2,
        "v": 1,
        "parts": [[4, 1, 2], [5, 3]],
        "eta": [0, 0, 1, 0, 0, 1],
    },
}


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(out: Path, command: str, params: dict, inputs: list[Path], seed=None) -> None:
    manifest = {
        "command": command,
        "version": __version__,
        "seed": seed,
        "params": params,
        "inputs": {str(p): _sha256(p) for p in inputs if p is not None},
        "outputs": [str(out)],
    }
    Path(str(out) + ".manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")


def _load_family_arg(path_str: str, q: int) -> tuple[Family, Path]:
    path = Path(path_str)
    if not path.exists():
        raise FileNotFoundError(f"no such family file: {path}")
    if path.suffix == ".json":
        return family_from_json(json.loads(path.read_text())), path
    return parse_family_text(path.read_text(), q), path


def _emit_family(fam: Family, out: str | None, fmt: str) -> None:
    text = format_family_text(fam) if fmt == "text" else json.dumps(family_to_json(fam), indent=1) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_parts(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";"))


def cmd_catalog(args) -> int:
    for entry in seed_catalog():
        m, n, length, width = entry.params
        print(f"{entry.id:24s} {entry.kind:5s} (M={m}, N={n}, L={length}, Z={width})  {entry.note}")
    return 0


def cmd_construct(args) -> int:
    inputs: list[Path] = []
    seed_id = None
    if args.builder == "theorem2":
        if args.seed:
            entry = catalog_entry(args.seed)
            seed_fam, width = entry.family, entry.params[3]
            seed_id = args.seed
        else:
            seed_fam, path = _load_family_arg(args.seed_file, args.q)
            inputs.append(path)
            if args.declared_z is None:
                raise ValueError("--declared-z is required with --seed-file")
            width = args.declared_z
        fam = theorem2_construct(seed_fam, width, force=args.force)
        width = width - 1  # output zone is one narrower than the seed's
        verdict = check_eczcs(fam, width)
        params = {"builder": "theorem2", "seed": seed_id, "zone": width}
    else:
        if args.preset:
            spec_dict = THEOREM3_PRESETS[args.preset]
        elif args.spec:
            spec_path = Path(args.spec)
            inputs.append(spec_path)
            spec_dict = json.loads(spec_path.read_text())
        else:
            raise ValueError("provide --preset or --spec")
        spec = _partition_from_dict(spec_dict)
        q = int(spec_dict.get("q", 2))
        eta = spec_dict.get("eta")
        if args.builder == "theorem3":
            v = int(spec_dict["v"])
            fam = theorem3_construct(spec, v, q, eta)
            width = theorem3_zcz_width(spec)
            verdict = check_eczcs(fam, width)
        else:  # lemma2
            fam = lemma2_ccc(spec, q, eta)
            width = fam.length
            verdict = check_ccc(fam)
        params = {"builder": args.builder, "spec": spec_dict, "zone": width}
    _emit_family(fam, args.out, args.format)
    if args.out:
        params["verdict"] = verdict.to_json()
        _write_manifest(Path(args.out), f"construct {args.builder}", params, inputs)
    if not verdict.passed:
        print("auto-verification FAILED", file=sys.stderr)
        return 1
    print(
        f"built (M={fam.num_sets}, N={fam.set_size}, L={fam.length}) family, "
        f"verified at zone width {width}",
        file=sys.stderr,
    )
    return 0


def _partition_from_dict(spec_dict: dict) -> PartitionSpec:
    """Read a construction spec; the part orderings may be named parts or pi.

    An optional U (the unordered parts) and k are cross-checked when given.
    """
    raw = spec_dict.get("parts", spec_dict.get("pi"))
    if raw is None:
        raise ValueError("construction spec needs a 'parts' (or 'pi') list of orderings")
    parts = tuple(tuple(int(x) for x in part) for part in raw)
    spec = PartitionSpec(int(spec_dict["m"]), parts)
    if "k" in spec_dict and int(spec_dict["k"]) != spec.k:
        raise ValueError(f"declared k={spec_dict['k']} but {spec.k} parts were given")
    if "U" in spec_dict:
        declared = [sorted(int(x) for x in u) for u in spec_dict["U"]]
        if declared != [sorted(p) for p in parts]:
            raise ValueError("declared U does not match the part orderings")
    return spec


_CHECKERS = {
    "zccs": lambda fam, z: check_zccs(fam, z),
    "szccs": lambda fam, z: check_szccs(fam, z),
    "eczcs": lambda fam, z: check_eczcs(fam, z),
    "mocs": lambda fam, z: check_mocs(fam),
    "ccc": lambda fam, z: check_ccc(fam),
}


def cmd_verify(args) -> int:
    fam, path = _load_family_arg(args.family, args.q)
    if args.kind == "zcz":
        if fam.num_sets != 1:
            raise ValueError("the zcz check applies to a single sequence set (M=1 family)")
        verdict = check_zcz_set(fam.sets[0], _require_z(args))
    else:
        z = _require_z(args) if args.kind in ("zccs", "szccs", "eczcs") else 0
        verdict = _CHECKERS[args.kind](fam, z)
    payload = verdict.to_json()
    payload["kind"] = args.kind
    payload["Z"] = args.Z
    payload["measured_width"] = measure_zcz_width(fam) if args.measure else None
    text = json.dumps(payload, indent=1) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        _write_manifest(Path(args.out), "verify", {"kind": args.kind, "Z": args.Z}, [path])
    else:
        sys.stdout.write(text)
    return 0 if verdict.passed else 1


def _require_z(args) -> int:
    if args.Z is None:
        raise ValueError(f"--Z is required for the {args.kind} check")
    return args.Z


def cmd_profile(args) -> int:
    fam, path = _load_family_arg(args.family, args.q)
    kind, _, rest = args.pair.partition(":")
    if kind in ("rho", "rhohat"):
        m1, m2 = (int(x) for x in rest.split(","))
        profile = (profile_set_corr if kind == "rho" else profile_cross_channel)(fam, m1, m2)
    elif kind in ("accf", "pccf"):
        first, second = rest.split(",")
        m1, n1 = (int(x) for x in first.split("."))
        m2, n2 = (int(x) for x in second.split("."))
        s0, s1 = fam.sets[m1].members[n1], fam.sets[m2].members[n2]
        profile = (profile_accf if kind == "accf" else profile_pccf)(s0, s1, label=args.pair)
    else:
        raise ValueError(f"unknown pairing kind {kind!r} (use rho/rhohat/accf/pccf)")
    text = profile.to_csv()
    if args.out:
        Path(args.out).write_text(text)
        _write_manifest(Path(args.out), "profile", {"pair": args.pair}, [path])
    else:
        sys.stdout.write(text)
    return 0


def cmd_train(args) -> int:
    fam, path = _load_family_arg(args.family, args.q)
    cfg = GSMConfig(args.nt, args.na)
    tm = build_training_matrix(fam, cfg, source=path.name)
    verdict = check_design_criterion(tm, args.delay_spread)
    csv_text = training_matrix_to_csv(tm)
    meta = training_matrix_meta(tm)
    meta["criterion"] = verdict.to_json()
    meta["delay_spread"] = args.delay_spread
    if args.out:
        Path(args.out).write_text(csv_text)
        Path(str(args.out) + ".meta.json").write_text(json.dumps(meta, indent=1) + "\n")
        _write_manifest(
            Path(args.out),
            "train",
            {"nt": args.nt, "na": args.na, "delay_spread": args.delay_spread},
            [path],
        )
    else:
        sys.stdout.write(csv_text)
        print(json.dumps(meta["criterion"], indent=1), file=sys.stderr)
    return 0 if verdict.passed else 1


def _matrix_from_config(spec: dict, base_dir: Path):
    cfg = GSMConfig(int(spec["nt"]), int(spec["na"]))
    kind = spec.get("kind", "family")
    if kind == "family":
        fam, path = _load_family_arg(str(base_dir / spec["path"]), int(spec.get("q", 2)))
        return build_training_matrix(fam, cfg, source=spec["path"]), [path]
    if kind == "seed":
        entry = catalog_entry(spec["id"])
        return build_training_matrix(entry.family, cfg, source=spec["id"]), []
    if kind == "random-binary":
        rng = np.random.default_rng(int(spec.get("rng_seed", 0)))
        return (
            baseline_random_binary(cfg, int(spec["blocks"]), int(spec["block_length"]), rng),
            [],
        )
    if kind == "zadoff-chu":
        roots = tuple(spec["roots"]) if "roots" in spec else None
        return (
            baseline_zadoff_chu(cfg, int(spec["blocks"]), int(spec["block_length"]), roots),
            [],
        )
    raise ValueError(f"unknown training matrix kind {kind!r}")


def cmd_simulate(args) -> int:
    config_path = Path(args.config)
    config = json.loads(config_path.read_text())
    tm, extra_inputs = _matrix_from_config(config["matrix"], config_path.parent)
    sim = SimConfig(
        ebn0_db=tuple(args.ebn0 or config["ebn0_db"]),
        delay_spreads=tuple(args.delay_spread or config["delay_spreads"]),
        trials=args.trials or int(config["trials"]),
        seed=args.seed if args.seed is not None else int(config["seed"]),
        matrix_id=config.get("matrix_id", config["matrix"].get("kind", "")),
    )
    report = monte_carlo_mse(tm, sim)
    text = report.to_csv()
    if args.out:
        Path(args.out).write_text(text)
        _write_manifest(
            Path(args.out),
            "simulate",
            {
                "ebn0_db": list(sim.ebn0_db),
                "delay_spreads": list(sim.delay_spreads),
                "trials": sim.trials,
                "matrix_id": sim.matrix_id,
            },
            [config_path, *extra_inputs],
            seed=sim.seed,
        )
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eczcs", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the built-in seed families").set_defaults(func=cmd_catalog)

    con = sub.add_parser("construct", help="run a construction and auto-verify its output")
    con_sub = con.add_subparsers(dest="builder", required=True)
    t2 = con_sub.add_parser("theorem2", help="double a code-set seed into an enhanced family")
    t2.add_argument("--seed", help="catalog seed id")
    t2.add_argument("--seed-file", help="family file holding the seed")
    t2.add_argument("--declared-z", type=int, help="seed zone width (required with --seed-file)")
    t2.add_argument("--force", action="store_true", help="skip seed re-verification")
    for builder in ("theorem3", "lemma2"):
        p = con_sub.add_parser(
            builder,
            help="chained Boolean-function construction"
            + (" (complete code)" if builder == "lemma2" else ""),
        )
        p.add_argument("--preset", choices=sorted(THEOREM3_PRESETS))
        p.add_argument("--spec", help="JSON file with m, q, v, parts, eta")
    for p in con_sub.choices.values():
        p.add_argument("--out", help="output family file")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--q", type=int, default=2, help="alphabet of text seed files")
        p.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="classify a family; exit 0 pass, 1 fail, 2 error")
    ver.add_argument("family")
    ver.add_argument("--kind", required=True, choices=("zcz", "zccs", "szccs", "eczcs", "mocs", "ccc"))
    ver.add_argument("--Z", type=int)
    ver.add_argument("--q", type=int, default=2)
    ver.add_argument("--measure", action="store_true", help="also report the measured zone width")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    prof = sub.add_parser("profile", help="tabulate a correlation profile as CSV")
    prof.add_argument("family")
    prof.add_argument("--pair", required=True, help="rho:m1,m2 | rhohat:m1,m2 | accf:m.n,m.n | pccf:m.n,m.n")
    prof.add_argument("--q", type=int, default=2)
    prof.add_argument("--out")
    prof.set_defaults(func=cmd_profile)

    tr = sub.add_parser("train", help="build a training matrix and check the design criterion")
    tr.add_argument("family")
    tr.add_argument("--nt", type=int, required=True)
    tr.add_argument("--na", type=int, required=True)
    tr.add_argument("--lambda", dest="delay_spread", type=int, required=True)
    tr.add_argument("--q", type=int, default=2)
    tr.add_argument("--out")
    tr.set_defaults(func=cmd_train)

    sim = sub.add_parser("simulate", help="Monte-Carlo channel-estimation MSE report")
    sim.add_argument("--config", required=True, help="JSON simulation configuration")
    sim.add_argument("--trials", type=int)
    sim.add_argument("--seed", type=int, help="master seed override")
    sim.add_argument("--ebn0", type=float, nargs="+")
    sim.add_argument("--lambda", dest="delay_spread", type=int, nargs="+")
    sim.add_argument("--out")
    sim.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SeedVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
