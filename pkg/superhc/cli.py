"""Command-line interface for SuperHC."""

# In[0]: Imports
import os
import sys
import time
from functools import wraps

import click
from rich.console import Console
from rich.theme import Theme

from . import __version__
from .utils.utils import CROSS_CHECK_ENV, log

# In[1]: CLI Setup
superhc_theme = Theme(
    {
        "info": "#0a9396",
        "warning": "#ee9b00",
        "danger": "#9b2226",
        "success": "#00ff00",
        "banner": "bold #d90429",
        "highlight": "#94d2bd",
    }
)
console = Console(theme=superhc_theme)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def print_banner():
    """Print ASCII banner."""
    banner = """
    ╔═══════════════════════════════════════════════════════════╗
    ║                                                           ║
    ║      SuperHC - Hochschild and cyclic (co)homology         ║
    ║            of finite superadditive categories             ║
    ║                      Version {version}                        ║
    ║                                                           ║
    ╚═══════════════════════════════════════════════════════════╝
    """.format(version=__version__)
    log(console, banner, style="banner")


def print_version_and_exit(value):
    if value:
        log(console, f"SuperHC version: {__version__}", style="info")
        raise SystemExit(0)


@click.group(context_settings=dict(help_option_names=["-h", "--help"]))
@click.option(
    "-v",
    "--version",
    is_flag=True,
    is_eager=True,
    expose_value=False,
    help="Show the SuperHC version",
    callback=lambda ctx, param, value: print_version_and_exit(value),
)
def cli():
    """
    SuperHC - Hochschild and cyclic (co)homology of finite superadditive categories

    Categories are YAML files or builtins addressed as @name (see `superhc catalog`).
    """
    pass


# In[2]: Shared options and command runner
field_option = click.option("-F", "--field", default=None, help="Field override: QQ or GF(p)")
json_option = click.option(
    "-o", "--json", "json_out", default=None, type=click.Path(), help="Write a JSON run report"
)
write_option = click.option(
    "-w", "--write", default=None, type=click.Path(), help="Write the result as a category file"
)
method_option = click.option(
    "-m", "--method", type=click.Choice(["bicomplex", "mixed"]), default="bicomplex", show_default=True
)
invariance_option = click.option(
    "--invariance/--no-invariance", default=True, show_default=True, help="Compare homology with the input"
)


def common_options(func):
    """--max-degree, --field, --json, --threads and --cross-check."""

    @click.option(
        "-n", "--max-degree", default=3, show_default=True, type=click.IntRange(0), help="Highest degree"
    )
    @field_option
    @json_option
    @click.option("-t", "--threads", default=None, type=click.IntRange(1), help="Worker thread cap")
    @click.option(
        "--cross-check", is_flag=True, help="Cross-check rational ranks modulo large primes"
    )
    @wraps(func)
    def wrapper(*args, **kwargs):
        if kwargs.get("cross_check"):
            os.environ[CROSS_CHECK_ENV] = "1"
        return func(*args, **kwargs)

    return wrapper


def run_command(name, body, json_out=None):
    """
    Run a command body that returns a RunReport, write the report, and exit with
    0 (passed), 1 (check failed or computation error) or 2 (parse/usage error).
    """
    from .utils.helper_dir import CategoryFileError, write_report

    started = time.perf_counter()
    try:
        report = body()
    except (CategoryFileError, click.UsageError) as e:
        log(console, f"✗ {name} failed: {str(e)}", style="danger")
        sys.exit(EXIT_USAGE)
    except Exception as e:
        log(console, f"✗ {name} failed: {str(e)}", style="danger")
        sys.exit(EXIT_CHECK_FAILED)

    report.timings["total"] = time.perf_counter() - started
    if json_out:
        out = write_report(report, json_out)
        log(console, f"Report written to {out}", style="info")
    if not report.passed:
        log(console, f"✗ {name}: check failed", style="danger")
        sys.exit(EXIT_CHECK_FAILED)
    log(console, f"✓ {name} done", style="success")
    sys.exit(EXIT_OK)


def _load(spec, field, check=True):
    from .utils.helper_dir import resolve_category

    return resolve_category(spec, field=field, check=check)


def _new_report(command, *cats, **extra):
    from .utils.helper_dir import RunReport, category_digest

    report = RunReport(command=command, **extra)
    for cat in cats:
        report.inputs[cat.name] = category_digest(cat)
    return report


def _convention(text):
    from .utils.products_dir import SignConvention

    try:
        return SignConvention.parse(text)
    except ValueError as e:
        raise click.UsageError(str(e))


# In[3]: Validation and catalog
@cli.command()
@click.argument("category")
@field_option
@json_option
def validate(category, field, json_out):
    """Check every axiom of a superadditive category."""
    from .utils.supercat import hom_profile
    from .utils.supercat import validate as validate_category

    def body():
        cat = _load(category, field, check=False)
        result = validate_category(cat)
        report = _new_report("validate", cat, passed=result.valid)
        report.defects["problems"] = result.problems
        for problem in result.problems:
            log(console, problem, style="danger")
        if result.valid:
            report.details["hom_profile"] = hom_profile(cat)
            summary = f"{cat.name}: {len(cat.objects)} object(s), dimension {cat.dimension}"
            log(console, summary, style="info")
        return report

    run_command("validate", body, json_out)


@cli.command()
def catalog():
    """List the builtin categories."""
    from .utils.catalog import BUILTINS, builtin
    from .utils.helper_dir import RunReport, display_rows

    def body():
        rows = []
        for name in BUILTINS:
            cat = builtin(name)
            odd = sum(b.parity for b in cat.basis)
            rows.append((f"@{name}", len(cat.objects), cat.dimension - odd, odd))
        display_rows(console, "Builtin categories", ["name", "objects", "even", "odd"], rows)
        return RunReport(command="catalog")

    run_command("catalog", body)


# In[4]: Hochschild and cyclic (co)homology
def _dims_body(command, category, field, compute):
    """Body of a command that prints one HomologyResult; compute(cat) returns it."""
    from .utils.helper_dir import display_dimensions

    def body():
        cat = _load(category, field)
        result = compute(cat)
        title = f"{result.name}({cat.name})"
        display_dimensions(console, title, {result.name: result.dims}, result.truncated_degree)
        report = _new_report(command, cat, truncated_degree=result.truncated_degree)
        report.dimensions[result.name] = result.dims
        report.details["chain_dims"] = result.chain_dims
        report.details["method"] = result.method
        return report

    return body


@cli.command()
@click.argument("category")
@click.option("--full", is_flag=True, help="Use the full instead of the normalized complex")
@common_options
def hh(category, full, max_degree, field, json_out, threads, cross_check):
    """Hochschild homology HH_n."""
    from .utils.homology import hochschild_homology

    def compute(cat):
        return hochschild_homology(cat, max_degree, normalized=not full, threads=threads)

    run_command("hh", _dims_body("hh", category, field, compute), json_out)


@cli.command()
@click.argument("category")
@common_options
def hcoh(category, max_degree, field, json_out, threads, cross_check):
    """Hochschild cohomology HH^n."""
    from .utils.homology import hochschild_cohomology

    def compute(cat):
        return hochschild_cohomology(cat, max_degree, threads=threads)

    run_command("hcoh", _dims_body("hcoh", category, field, compute), json_out)


@cli.command()
@click.argument("category")
@method_option
@common_options
def hc(category, method, max_degree, field, json_out, threads, cross_check):
    """Cyclic homology HC_n."""
    from .utils.cyclic import cyclic_homology

    def compute(cat):
        return cyclic_homology(cat, max_degree, method=method, threads=threads)

    run_command("hc", _dims_body("hc", category, field, compute), json_out)


@cli.command()
@click.argument("category")
@method_option
@common_options
def hccoh(category, method, max_degree, field, json_out, threads, cross_check):
    """Cyclic cohomology HC^n."""
    from .utils.cyclic import cyclic_cohomology

    def compute(cat):
        return cyclic_cohomology(cat, max_degree, method=method, threads=threads)

    run_command("hccoh", _dims_body("hccoh", category, field, compute), json_out)


# In[5]: Degree zero
@cli.command()
@click.argument("category")
@field_option
@json_option
def center(category, field, json_out):
    """Graded center (HH^0) with a basis."""
    from .utils.exactlin import format_scalar
    from .utils.helper_dir import display_rows
    from .utils.homology import graded_center

    def body():
        cat = _load(category, field)
        result = graded_center(cat)
        basis = [{mid: format_scalar(c, cat.K) for mid, c in vec.items()} for vec in result.basis]
        rows = list(enumerate(basis))
        display_rows(console, f"Z({cat.name})", ["#", "element"], rows)
        report = _new_report("center", cat)
        report.dimensions["center"] = [result.dimension]
        report.details["basis"] = basis
        return report

    run_command("center", body, json_out)


@cli.command()
@click.argument("category")
@field_option
@json_option
def hh0(category, field, json_out):
    """HH_0 and HH^0 from the complexes next to the commutator quotient and graded center."""
    from .utils.helper_dir import display_rows
    from .utils.homology import agreement_in_degree_zero

    def body():
        cat = _load(category, field)
        agreement = agreement_in_degree_zero(cat)
        rows = [(k, a, b, "✓" if a == b else "✗") for k, (a, b) in agreement.items()]
        display_rows(console, f"Degree 0 of {cat.name}", ["", "complex", "shortcut", ""], rows)
        report = _new_report("hh0", cat, passed=all(a == b for a, b in agreement.values()))
        report.details["agreement"] = {k: list(v) for k, v in agreement.items()}
        return report

    run_command("hh0", body, json_out)


# In[6]: Constructions
def _describe_construction(cat, write):
    from .utils.helper_dir import display_rows, write_category_file
    from .utils.supercat import hom_profile

    profile = hom_profile(cat)
    rows = [
        (x, y, f"{profile[i][j][0]}|{profile[i][j][1]}")
        for i, x in enumerate(cat.objects)
        for j, y in enumerate(cat.objects)
        if sum(profile[i][j])
    ]
    display_rows(console, f"{cat.name}: hom dimensions (even|odd)", ["source", "target", "dim"], rows)
    if write:
        out = write_category_file(cat, write)
        log(console, f"Category written to {out}", style="info")
    return profile


@cli.command()
@click.argument("first")
@click.argument("second")
@field_option
@write_option
@json_option
def tensor(first, second, field, write, json_out):
    """Tensor product A ⊗ B with Koszul signs."""
    from .utils.supercat import require_valid, tensor_product

    def body():
        a, b = _load(first, field), _load(second, field)
        product = require_valid(tensor_product(a, b))
        report = _new_report("tensor", a, b)
        report.details["hom_profile"] = _describe_construction(product, write)
        return report

    run_command("tensor", body, json_out)


@cli.command()
@click.argument("category")
@field_option
@write_option
@json_option
def op(category, field, write, json_out):
    """Opposite category."""
    from .utils.supercat import opposite, require_valid

    def body():
        cat = _load(category, field)
        report = _new_report("op", cat)
        report.details["hom_profile"] = _describe_construction(require_valid(opposite(cat)), write)
        return report

    run_command("op", body, json_out)


def _invariance(cat, completed, max_degree, threads, report):
    from .utils.helper_dir import display_dimensions
    from .utils.morita import invariance_report

    result = invariance_report(cat, completed, max_degree, threads=threads)
    rows = {}
    for theory, (left, right) in result.dims.items():
        rows[f"{theory} {cat.name}"] = left
        rows[f"{theory} {completed.name}"] = right
    display_dimensions(console, "Morita invariance", rows, max_degree)
    report.details["invariance"] = result.to_dict()
    report.defects["mismatches"] = result.mismatches
    report.passed = result.invariant
    report.truncated_degree = max_degree


@cli.command()
@click.argument("category")
@click.option(
    "-L", "--length", default=2, show_default=True, type=click.IntRange(1), help="Maximum sequence length"
)
@click.option(
    "--max-objects", default=64, show_default=True, type=click.IntRange(1), help="Bound on the object count"
)
@invariance_option
@write_option
@common_options
def mat(
    category, length, max_objects, invariance, write, max_degree, field, json_out, threads, cross_check
):
    """Matrix truncation Mat_L and its invariance report."""
    from .utils.morita import mat_truncation

    def body():
        cat = _load(category, field)
        completed = mat_truncation(cat, length, max_objects)
        report = _new_report("mat", cat)
        report.details["hom_profile"] = _describe_construction(completed, write)
        if invariance:
            _invariance(cat, completed, max_degree, threads, report)
        return report

    run_command("mat", body, json_out)


@cli.command()
@click.argument("category")
@click.option(
    "-i", "--idempotents", required=True, type=click.Path(), help="YAML list of idempotents"
)
@invariance_option
@write_option
@common_options
def idem(
    category, idempotents, invariance, write, max_degree, field, json_out, threads, cross_check
):
    """Idempotent fragment with the given even idempotents split."""
    from .utils.helper_dir import load_idempotents
    from .utils.morita import idempotent_fragment

    def body():
        cat = _load(category, field)
        fragment = idempotent_fragment(cat, load_idempotents(idempotents, cat))
        report = _new_report("idem", cat)
        report.details["hom_profile"] = _describe_construction(fragment, write)
        if invariance:
            _invariance(cat, fragment, max_degree, threads, report)
        return report

    run_command("idem", body, json_out)


# In[7]: Products
@cli.command("verify-identities")
@click.argument("first")
@click.argument("second")
@click.option("-s", "--seed", default=None, type=int, help="Seed for sampling basis pairs")
@click.option("--sample", default=None, type=click.IntRange(1), help="Basis pairs per total degree")
@click.option(
    "-c", "--convention", default="auto", show_default=True, help="'auto' or e.g. koszul-homological"
)
@common_options
def verify_identities(
    first, second, seed, sample, convention, max_degree, field, json_out, threads, cross_check
):
    """[∂,sh] = 0, [B,sh] + [∂,csh] = 0 and [B,csh] = 0 on normalized chains."""
    from .utils.helper_dir import display_rows
    from .utils.products import resolve_convention, verify_chain_identities

    def body():
        a, b = _load(first, field), _load(second, field)
        report = _new_report("verify-identities", a, b, seed=seed, truncated_degree=max_degree)
        if convention == "auto":
            resolution = resolve_convention(
                a, b, max_degree, seed=seed, sample=sample, threads=threads
            )
            reports = resolution.reports
            report.convention = resolution.selected
            report.passed = resolution.selected is not None
            report.details["resolution"] = resolution.to_dict()
        else:
            result = verify_chain_identities(
                a, b, max_degree, _convention(convention), seed=seed, sample=sample, threads=threads
            )
            reports = {result.convention: result}
            report.convention = result.convention
            report.passed = result.holds
            report.details["identities"] = result.to_dict()
        rows = []
        for name, result in reports.items():
            for identity, failures in result.failures.items():
                witness = result.first_failure.get(identity)
                shown = witness.witness if witness else ""
                rows.append((name, identity, result.checked[identity], failures, shown))
        header = ["convention", "identity", "checked", "failures", "witness"]
        display_rows(console, f"Chain identities on {a.name} ⊗ {b.name}", header, rows)
        if report.convention:
            log(console, f"Convention: {report.convention}", style="highlight")
        return report

    run_command("verify-identities", body, json_out)


@cli.command()
@click.argument("first")
@click.argument("second")
@click.option(
    "-c", "--convention", default="koszul-homological", show_default=True, help="Sign convention"
)
@common_options
def ez(first, second, convention, max_degree, field, json_out, threads, cross_check):
    """Eilenberg–Zilber: HH(A ⊗ B) against HH(A) ⊗ HH(B) through sh."""
    from .utils.helper_dir import display_dimensions
    from .utils.products import ez_check

    def body():
        conv = _convention(convention)
        a, b = _load(first, field), _load(second, field)
        result = ez_check(a, b, max_degree, conv, threads=threads)
        rows = {
            "HH(A⊗B)": result.tensor_dims,
            "Σ HH_p·HH_q": result.expected,
            "rank sh": result.sh_ranks,
        }
        display_dimensions(console, f"Eilenberg–Zilber for {a.name} ⊗ {b.name}", rows, max_degree)
        report = _new_report(
            "ez", a, b, convention=conv.name, truncated_degree=max_degree, passed=result.holds
        )
        report.dimensions["HH_tensor"] = result.tensor_dims
        report.dimensions["expected"] = result.expected
        report.dimensions["sh_ranks"] = result.sh_ranks
        return report

    run_command("ez", body, json_out)


@cli.command()
@click.argument("first")
@click.argument("second")
@common_options
def kunneth(first, second, max_degree, field, json_out, threads, cross_check):
    """Künneth rank identity dim HC_n(A⊗B) = dim ker φ_n + dim coker φ_{n+1}."""
    from .utils.helper_dir import display_dimensions
    from .utils.products import kunneth_check

    def body():
        a, b = _load(first, field), _load(second, field)
        result = kunneth_check(a, b, max_degree, threads=threads)
        rows = {
            "HC(A⊗B)": result.tensor_dims,
            "ker φ_n": result.kernel_dims,
            "coker φ_n+1": result.cokernel_dims,
        }
        display_dimensions(console, f"Künneth for {a.name} ⊗ {b.name}", rows, max_degree)
        report = _new_report("kunneth", a, b, truncated_degree=max_degree, passed=result.holds)
        report.dimensions["HC_tensor"] = result.tensor_dims
        report.dimensions["predicted"] = result.predicted
        report.details["kunneth"] = result.to_dict()
        return report

    run_command("kunneth", body, json_out)


# In[8]: Gysin–Connes
@cli.command("gysin-connes")
@click.argument("category")
@common_options
def gysin_connes(category, max_degree, field, json_out, threads, cross_check):
    """Exactness of ... → HH_n → HC_n → HC_{n-2} → HH_{n-1} → ..."""
    from .utils.cyclic import verify_gysin_connes
    from .utils.helper_dir import display_rows

    def body():
        cat = _load(category, field)
        result = verify_gysin_connes(cat, max_degree, threads=threads)
        rows = [(label, dim) for label, dim in zip(result.labels, result.dims)]
        display_rows(console, f"Gysin–Connes sequence of {cat.name}", ["space", "dim"], rows)
        report = _new_report("gysin-connes", cat, truncated_degree=max_degree, passed=result.exact)
        report.defects["exactness"] = result.defects
        report.details["sequence"] = result.to_dict()
        return report

    run_command("gysin-connes", body, json_out)


# In[9]: Config-driven suite
@cli.command()
@click.argument("config", type=click.Path(exists=True))
def run(config):
    """
    Run the checks enabled in a YAML config (see superhc/example_config.yaml).

    Args:
        config: Path to the YAML run configuration
    """
    from .pipeline import run_suite_pipeline

    print_banner()
    try:
        report = run_suite_pipeline(console=console, config=config)
    except Exception as e:
        log(console, f"✗ Suite failed: {str(e)}", style="danger")
        sys.exit(EXIT_USAGE)
    if not report.passed:
        log(console, "✗ Some checks failed", style="danger")
        sys.exit(EXIT_CHECK_FAILED)
    log(console, "✓ All checks passed", style="success")


# In[ ]: Main Entry Point
def main():
    """Entry point for CLI."""
    try:
        cli()
    except KeyboardInterrupt:
        log(console, "\nInterrupted by user", style="warning")
        sys.exit(130)
    except Exception as e:
        log(console, f"\nUnexpected error: {str(e)}", style="danger")
        sys.exit(1)


# In[ ]: Run Main
if __name__ == "__main__":
    main()
