# In[0]: Imports
import os
import time
from pathlib import Path

import yaml

from .config import error_check_config, get_nested, is_enabled
from .utils.exactlin import FieldSpec
from .utils.helper_dir import RunReport, category_digest, resolve_category, write_report
from .utils.supercat import validate
from .utils.utils import CROSS_CHECK_ENV, log, progress_bar

REPORT_NAME = "superhc_report.json"


# In[1]: Step runners
def _hochschild_step(cat, cfg, step, report, threads):
    from .utils.homology import agreement_in_degree_zero, hochschild_cohomology, hochschild_homology

    nmax = cfg["max_degree"]
    normalized = step.get("normalized", True)
    report.dimensions[f"{cat.name}.HH"] = hochschild_homology(
        cat, nmax, normalized=normalized, threads=threads
    ).dims
    if step.get("cohomology", True):
        report.dimensions[f"{cat.name}.HH*"] = hochschild_cohomology(cat, nmax, threads=threads).dims
    if step.get("degree_zero", True):
        agreement = agreement_in_degree_zero(cat)
        report.details[f"{cat.name}.degree_zero"] = {k: list(v) for k, v in agreement.items()}
        if any(a != b for a, b in agreement.values()):
            report.passed = False
            report.defects[f"{cat.name}.degree_zero"] = "complex and shortcut disagree"


def _cyclic_step(cat, cfg, step, report, threads):
    from .utils.cyclic import cyclic_cohomology, cyclic_homology

    method = cfg.get("method", "bicomplex")
    nmax = cfg["max_degree"]
    report.dimensions[f"{cat.name}.HC"] = cyclic_homology(cat, nmax, method=method, threads=threads).dims
    if step.get("cohomology", True):
        report.dimensions[f"{cat.name}.HC*"] = cyclic_cohomology(
            cat, nmax, method=method, threads=threads
        ).dims


def _gysin_connes_step(cat, cfg, step, report, threads):
    from .utils.cyclic import verify_gysin_connes

    result = verify_gysin_connes(cat, step.get("max_degree", cfg["max_degree"]), threads=threads)
    report.details[f"{cat.name}.gysin_connes"] = result.to_dict()
    if not result.exact:
        report.passed = False
        report.defects[f"{cat.name}.gysin_connes"] = result.defects


def _morita_step(cat, cfg, step, report, threads):
    from .utils.morita import DEFAULT_MAX_OBJECTS, invariance_report, mat_truncation

    completed = mat_truncation(cat, step.get("length", 2), step.get("max_objects", DEFAULT_MAX_OBJECTS))
    result = invariance_report(
        cat, completed, step.get("max_degree", cfg["max_degree"]), method="mixed", threads=threads
    )
    report.details[f"{cat.name}.morita"] = result.to_dict()
    if not result.invariant:
        report.passed = False
        report.defects[f"{cat.name}.morita"] = result.mismatches


def _identities_step(a, b, cfg, step, report, threads):
    from .utils.products import resolve_convention, verify_chain_identities
    from .utils.products_dir import SignConvention

    key = f"{a.name}x{b.name}.identities"
    nmax = step.get("max_degree", cfg["max_degree"])
    convention = step.get("convention", "auto")
    seed, sample = cfg.get("seed"), step.get("sample")
    if convention == "auto":
        resolution = resolve_convention(a, b, nmax, seed=seed, sample=sample, threads=threads)
        report.details[key] = resolution.to_dict()
        report.convention = resolution.selected
        passed = resolution.selected is not None
    else:
        result = verify_chain_identities(
            a, b, nmax, SignConvention.parse(convention), seed=seed, sample=sample, threads=threads
        )
        report.details[key] = result.to_dict()
        report.convention = result.convention
        passed = result.holds
    if not passed:
        report.passed = False
        report.defects[key] = "chain identities fail"


def _ez_step(a, b, cfg, step, report, threads):
    from .utils.products import ez_check

    key = f"{a.name}x{b.name}.ez"
    result = ez_check(a, b, step.get("max_degree", cfg["max_degree"]), threads=threads)
    report.details[key] = result.to_dict()
    if not result.holds:
        report.passed = False
        report.defects[key] = result.to_dict()


def _kunneth_step(a, b, cfg, step, report, threads):
    from .utils.products import kunneth_check

    key = f"{a.name}x{b.name}.kunneth"
    result = kunneth_check(a, b, step.get("max_degree", cfg["max_degree"]), threads=threads)
    report.details[key] = result.to_dict()
    if not result.holds:
        report.passed = False
        report.defects[key] = result.to_dict()


CATEGORY_STEPS = [
    ("hochschild", _hochschild_step),
    ("cyclic", _cyclic_step),
    ("gysin_connes", _gysin_connes_step),
    ("morita", _morita_step),
]
PAIR_STEPS = [
    ("identities", _identities_step),
    ("ez", _ez_step),
    ("kunneth", _kunneth_step),
]


# In[2]: Suite pipeline
def run_suite_pipeline(console=None, config=None):
    """
    Run the checks enabled in a YAML run config and write a RunReport.

    Args:
        console: Rich console (None for plain output)
        config: Path to the YAML config

    Returns:
        RunReport: The report, also written to output_dir/superhc_report.json

    Raises:
        ValueError: If the config is missing or invalid
    """
    if not config:
        raise ValueError("Config file is required for running the suite.")

    try:
        with open(config, "r") as f:
            config_data = yaml.safe_load(f)
    except Exception as e:
        raise ValueError(f"Failed to read the config file: {e}")

    error_check_config(config_data, console)

    if config_data.get("cross_check"):
        os.environ[CROSS_CHECK_ENV] = "1"
    threads = config_data["threads"]
    field = FieldSpec.parse(config_data["field"])
    report = RunReport(
        command="run",
        seed=config_data.get("seed"),
        truncated_degree=config_data["max_degree"],
    )
    started = time.perf_counter()

    cache = {}
    check_files = not is_enabled(config_data, ("validate",))

    def load(spec, check=True):
        if spec not in cache:
            cat = resolve_category(spec, field=field, check=check)
            if not check:
                result = validate(cat)
                report.details[f"{spec}.validate"] = result.problems
                if not result.valid:
                    raise ValueError(f"invalid category: {len(result.problems)} problem(s)")
            cache[spec] = cat
            report.inputs[spec] = category_digest(cat)
        return cache[spec]

    # Step 1: load (and with validate.run, report on) every category named in the config
    categories = []
    for spec in config_data["categories"]:
        try:
            categories.append(load(spec, check=check_files))
            log(console, f"✓ Loaded {spec}", style="success")
        except Exception as e:
            log(console, f"Failed to load {spec}: {e}", style="danger")
            report.passed = False
            report.defects[spec] = str(e)

    # Step 2: per-category steps
    tasks = [
        (name, step_func, cat)
        for name, step_func in CATEGORY_STEPS
        if is_enabled(config_data, (name,))
        for cat in categories
    ]
    with progress_bar(console, total=len(tasks), description="Running checks") as (progress, task):
        for name, step_func, cat in tasks:
            progress.update(task, description=f"{name} on {cat.name}")
            step = get_nested(config_data, name)
            step_started = time.perf_counter()
            try:
                step_func(cat, config_data, step, report, threads)
                log(console, f"✓ {name} on {cat.name}", style="success")
            except Exception as e:
                log(console, f"Failed to run {name} on {cat.name}: {e}", style="danger")
                report.passed = False
                report.defects[f"{cat.name}.{name}"] = str(e)
            report.timings[f"{cat.name}.{name}"] = time.perf_counter() - step_started
            progress.advance(task)

    # Step 3: steps on pairs of categories
    for name, step_func in PAIR_STEPS:
        if not is_enabled(config_data, (name,)):
            continue
        step = get_nested(config_data, name)
        for left, right in step["pairs"]:
            step_started = time.perf_counter()
            label = f"{left}x{right}.{name}"
            try:
                step_func(load(left), load(right), config_data, step, report, threads)
                log(console, f"✓ {name} on {left} ⊗ {right}", style="success")
            except Exception as e:
                log(console, f"Failed to run {name} on {left} ⊗ {right}: {e}", style="danger")
                report.passed = False
                report.defects[label] = str(e)
            report.timings[label] = time.perf_counter() - step_started

    report.timings["total"] = time.perf_counter() - started
    out = write_report(report, Path(config_data["output_dir"]).expanduser() / REPORT_NAME)
    log(console, f"Report written to {out}", style="info")
    return report
