"""
Utility functions shared by the services and the CLI.
"""

import hashlib
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .config import settings
from .exceptions import InputError


def ensure_output_directory(path: Optional[str] = None) -> Path:
    """Ensure the output directory exists."""
    out_path = Path(path or settings.output_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    return out_path


def file_sha256(file_path: Path) -> str:
    """Hex sha256 digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(file_path, "rb") as handle:
        for block in iter(lambda: handle.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def format_file_size(size_bytes: int) -> str:
    """Format file size in human readable format."""
    if size_bytes == 0:
        return "0 B"

    size_names = ["B", "KB", "MB", "GB"]
    size = float(size_bytes)
    i = 0
    while size >= 1024 and i < len(size_names) - 1:
        size /= 1024.0
        i += 1

    return f"{size:.1f} {size_names[i]}"


def parse_index_list(text: str) -> List[int]:
    """Parse a comma separated list of relation indices such as '0,4'."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise InputError("empty index list", {"value": text})
    try:
        return sorted({int(item) for item in items})
    except ValueError:
        raise InputError("index list must contain integers", {"value": text})


def row_chunks(n: int, workers: Optional[int] = None) -> List[np.ndarray]:
    """Split range(n) into contiguous row ranges, one per worker."""
    count = max(1, min(n, workers or settings.worker_count))
    return [chunk for chunk in np.array_split(np.arange(n), count) if chunk.size]


def format_int_list(values: Sequence[int]) -> str:
    return " ".join(str(int(v)) for v in values)
