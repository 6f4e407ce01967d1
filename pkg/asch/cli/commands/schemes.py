"""
verify, spectra, imprimitive, quotient: certificates and spectra of a scheme file.
"""

from ...core.file_formats import format_rational_matrix, format_scheme, read_scheme
from ...core.utils import format_int_list, parse_index_list
from ...services.imprimitivity import find_closed_subsets, quotient_scheme
from ...services.scheme_core import verify_axioms
from ...services.spectra import compute_spectrum, verify_duality
from ..output import default_outdir, write_artifacts


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="certify the scheme axioms")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.set_defaults(handler=run_verify)

    parser = subparsers.add_parser("spectra", help="eigenmatrices and duality identities")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.add_argument("-o", "--outdir", default=None, help="also write P.txt and Q.txt here")
    parser.set_defaults(handler=run_spectra)

    parser = subparsers.add_parser("imprimitive", help="list closed relation subsets")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.set_defaults(handler=run_imprimitive)

    parser = subparsers.add_parser("quotient", help="quotient scheme by a closed subset")
    parser.add_argument("scheme", help="scheme file (ASCH v1)")
    parser.add_argument("--block", required=True, help="closed relation subset, e.g. 0,4")
    parser.add_argument("-o", "--outdir", default=None, help="output directory (default: next to the input)")
    parser.set_defaults(handler=run_quotient)


def run_verify(args) -> int:
    cert = verify_axioms(read_scheme(args.scheme))
    print(f"n={cert.n} d={cert.d}")
    print(f"valencies: {format_int_list(cert.k)}")
    print("axioms: OK")
    return 0


def run_spectra(args) -> int:
    spectrum = compute_spectrum(verify_axioms(read_scheme(args.scheme)))
    report = verify_duality(spectrum)

    print(f"valencies: {format_int_list(spectrum.k)}")
    print(f"multiplicities: {format_int_list(spectrum.m)}")
    print("P:")
    print(format_rational_matrix(spectrum.P), end="")
    print("Q:")
    print(format_rational_matrix(spectrum.Q), end="")
    for identity in report.checked:
        cells = [v for v in report.violations if v.identity == identity]
        print(f"IDENTITY {identity}: {'OK' if not cells else f'{len(cells)} cells violated'}")
    for cell in report.violations:
        print(f"VIOLATION {cell.identity} row={cell.row} col={cell.col} lhs={cell.lhs} rhs={cell.rhs}")

    if args.outdir:
        write_artifacts(
            command="spectra",
            inputs=[args.scheme],
            outdir=args.outdir,
            files={"P.txt": format_rational_matrix(spectrum.P), "Q.txt": format_rational_matrix(spectrum.Q)},
        )
    return 0 if report.ok else 1


def run_imprimitive(args) -> int:
    cert = verify_axioms(read_scheme(args.scheme))
    for subset in find_closed_subsets(cert):
        block_size = sum(cert.k[i] for i in subset)
        print(f"closed: {','.join(map(str, subset))} block_size={block_size} blocks={cert.n // block_size}")
    return 0


def run_quotient(args) -> int:
    cert = verify_axioms(read_scheme(args.scheme))
    structure = quotient_scheme(cert, parse_index_list(args.block))
    outdir = default_outdir(args.outdir, args.scheme)
    write_artifacts(
        command=f"quotient --block {args.block}",
        inputs=[args.scheme],
        outdir=outdir,
        files={"quotient.asch": format_scheme(structure.quotient)},
    )
    classes = "|".join(",".join(map(str, c)) for c in structure.classes)
    print(f"quotient: n={structure.quotient.n} d={structure.quotient.d} classes={classes}")
    print(f"blocks: {structure.block_count} of size {structure.block_size}")
    print(f"valencies: {format_int_list(structure.certificate.k)}")
    return 0
