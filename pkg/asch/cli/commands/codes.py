"""
gold: build the Gold code, its 4-class scheme and the coset spread.
"""

from ...core.config import settings
from ...core.file_formats import format_codewords, format_partition, format_scheme
from ...core.utils import format_int_list
from ...services.pipeline import scheme_pipeline
from ..output import write_artifacts


def register(subparsers) -> None:
    parser = subparsers.add_parser("gold", help="generate the Gold code scheme and its RM(1,m) cosets")
    parser.add_argument("-m", type=int, required=True, help="odd extension degree")
    parser.add_argument("-o", "--outdir", default=settings.output_dir, help="output directory")
    parser.set_defaults(handler=run_gold)


def run_gold(args) -> int:
    code, scheme, cosets = scheme_pipeline.gold(args.m)
    write_artifacts(
        command=f"gold -m {args.m}",
        inputs=[],
        outdir=args.outdir,
        files={
            "codewords.txt": format_codewords(code),
            "scheme.asch": format_scheme(scheme),
            "cosets.part": format_partition(cosets),
        },
    )
    print(f"n={scheme.n} d={scheme.d}")
    print(f"weights: {format_int_list(code.weight_counts.keys())}")
    print(f"weight counts: {format_int_list(code.weight_counts.values())}")
    print(f"cosets: f={cosets.f} size={code.size // cosets.f}")
    return 0
