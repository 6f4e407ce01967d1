"""
Artifact writing shared by the commands.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

from ..core.file_formats import write_text
from ..core.utils import ensure_output_directory, file_sha256, format_file_size
from ..models.manifest import Artifact, RunManifest

logger = logging.getLogger(__name__)


def default_outdir(outdir: Optional[str], input_path: str) -> str:
    """Commands that refine an input write next to it unless -o is given."""
    return outdir if outdir else str(Path(input_path).parent)


def write_artifacts(command: str, inputs: List[str], outdir: str, files: Dict[str, str]) -> RunManifest:
    """Write files in the given order, then manifest.json with their hashes."""
    target = ensure_output_directory(outdir)
    manifest = RunManifest(command=command, inputs=inputs, outdir=outdir)
    for name, text in files.items():
        path = write_text(target / name, text)
        manifest.artifacts.append(Artifact(path=name, sha256=file_sha256(path), size=path.stat().st_size))
        logger.info(f"[OK] Wrote {path} ({format_file_size(path.stat().st_size)})")

    write_text(target / "manifest.json", json.dumps(manifest.model_dump(), indent=2) + "\n")
    return manifest
