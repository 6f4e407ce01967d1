"""
cover-params, clique-bound: two-fold cover parameters and tight cliques.
"""

from ...core.file_formats import read_partition, read_scheme
from ...core.utils import format_int_list
from ...services.clique_fission import delsarte_bound, validate_spread, verify_tight_regularity
from ...services.imprimitivity import antipodal_action, check_cover_template
from ...services.pipeline import scheme_pipeline


def register(subparsers) -> None:
    parser = subparsers.add_parser("cover-params", help="recognize a 4-class two-fold cover")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.set_defaults(handler=run_cover_params)

    parser = subparsers.add_parser("clique-bound", help="clique bound and tight-clique regularity")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.add_argument("--partition", default=None, help="spread to validate (PART v1)")
    parser.set_defaults(handler=run_clique_bound)


def _status(ok: bool) -> str:
    return "OK" if ok else "FAIL"


def run_cover_params(args) -> int:
    profile = scheme_pipeline.cover(read_scheme(args.scheme))
    template = check_cover_template(profile)
    antipodal = antipodal_action(profile)

    print(f"arrangement: {format_int_list(profile.arrangement)}")
    print(f"quotient: m={profile.m} r={profile.r} s={profile.s} n={profile.n}")
    print(f"m3={profile.m3} m4={profile.m4} alpha3={profile.alpha3} alpha4={profile.alpha4} k={profile.k}")
    for name, ok in template.identities.items():
        print(f"IDENTITY {name}: {_status(ok)}")
    print(f"TEMPLATE cover Q: {_status(not template.template_cells)}")
    for cell in template.template_cells + template.embedding_cells:
        print(f"CELL {cell.identity} row={cell.row} col={cell.col} computed={cell.lhs} expected={cell.rhs}")
    print(f"EMBEDDING quotient Q: {_status(not template.embedding_cells)}")
    print(
        f"ANTIPODAL: {_status(antipodal.ok)} failing={format_int_list(antipodal.failing_relations) or '-'} "
        f"involution={antipodal.involution} fixed_point_free={antipodal.fixed_point_free}"
    )
    return 0 if template.ok and antipodal.ok else 1


def run_clique_bound(args) -> int:
    profile = scheme_pipeline.cover(read_scheme(args.scheme))
    theta, bound = delsarte_bound(profile.spectrum)
    print(f"theta={theta} bound={bound}")
    if not args.partition:
        return 0

    spread = validate_spread(profile, read_partition(args.partition))
    print(f"spread: f={spread.f} blocks of size {spread.bound}: OK")
    regularity = verify_tight_regularity(profile, spread.members(0))
    print(f"constants: {format_int_list(regularity.constants)}")
    print(f"quotient constants: {format_int_list(regularity.quotient_constants)}")
    print(f"c1 = c3: {_status(regularity.symmetric)}")
    print(f"halving: {_status(regularity.halving)}")
    print(
        f"quotient clique: size={regularity.quotient_clique_size} bound={regularity.quotient_bound} "
        f"{_status(regularity.quotient_tight)}"
    )
    return 0 if regularity.symmetric and regularity.halving and regularity.quotient_tight else 1
