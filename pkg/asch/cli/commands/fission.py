"""
fission, muwm: the 5-class refinement and its weighing matrix family.
"""

from ...core.file_formats import format_rational_matrix, format_scheme, format_weighing, read_partition, read_scheme
from ...core.utils import format_int_list
from ...services.pipeline import scheme_pipeline
from ..output import default_outdir, write_artifacts


def register(subparsers) -> None:
    parser = subparsers.add_parser("fission", help="refine R_2 by a spread of tight cliques")
    parser.add_argument("scheme", help="4-class cover (ASCH v1)")
    parser.add_argument("--partition", required=True, help="spread (PART v1)")
    parser.add_argument("--report", action="store_true", help="write and print the reconciliation report")
    parser.add_argument("-o", "--outdir", default=None, help="output directory (default: next to the input)")
    parser.set_defaults(handler=run_fission)

    parser = subparsers.add_parser("muwm", help="extract and certify mutually unbiased weighing matrices")
    parser.add_argument("scheme", help="5-class fission scheme (ASCH v1)")
    parser.add_argument("--partition", required=True, help="spread (PART v1)")
    parser.add_argument("-o", "--outdir", default=None, help="output directory (default: next to the input)")
    parser.set_defaults(handler=run_muwm)


def run_fission(args) -> int:
    _, scheme = scheme_pipeline.fission(read_scheme(args.scheme), read_partition(args.partition))
    files = {"fission.asch": format_scheme(scheme.refined)}
    report_text = scheme.reconciliation.to_text()
    if args.report:
        files["reconciliation.txt"] = report_text

    write_artifacts(
        command="fission --report" if args.report else "fission",
        inputs=[args.scheme, args.partition],
        outdir=default_outdir(args.outdir, args.scheme),
        files=files,
    )
    print(f"n={scheme.refined.n} d={scheme.refined.d}")
    print(f"valencies: {format_int_list(scheme.cert5.k)}")
    print(f"multiplicities: {format_int_list(scheme.spectrum5.m)}")
    print("Q:")
    print(format_rational_matrix(scheme.spectrum5.Q), end="")
    if args.report:
        print(report_text, end="")
    return 0


def run_muwm(args) -> int:
    bound, family, certificate = scheme_pipeline.muwm(read_scheme(args.scheme), read_partition(args.partition))

    # one matrix per clique: W_{a,0} for a >= 1 and W_{0,1}
    files = {"W_0_1.txt": format_weighing(family.W[0, 1], 0, 1, family.weight)}
    for a in range(1, family.f):
        files[f"W_{a}_0.txt"] = format_weighing(family.W[a, 0], a, 0, family.weight)
    write_artifacts(
        command="muwm",
        inputs=[args.scheme, args.partition],
        outdir=default_outdir(args.outdir, args.scheme),
        files=files,
    )

    print(f"bound: within-clique {bound.within_clique_sum} literal {bound.literal_sum} min(2m3,2m4) {bound.bound}")
    print(f"equality: {'E~' + str(bound.equality_eigenindex) if bound.equality_eigenindex else 'none'}")
    print(f"closed-form size={bound.formula_size} weight={bound.formula_weight}")
    print(f"family: f={family.f} W({family.dim},{family.weight}) alpha={family.alpha} eigenspace E~{family.eigenindex}")
    print(f"UNBIASED: {certificate.pairs_ok}/{certificate.pairs_checked} ordered pairs OK")
    return 0 if certificate.ok else 1
