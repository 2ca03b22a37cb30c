"""On-disk cache of divisor enumerations, one text file per ell."""

import logging
import os
from pathlib import Path
import tempfile

from ..braid.expseq import parse_expseq
from .enumeration import EnumTable

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _cache_dir() -> Path:
    from ..config import get_config

    return Path(get_config().cache_dir)


def table_filepath(ell: int, cache_dir: Path | None = None) -> Path:
    if cache_dir is None:
        cache_dir = _cache_dir()
    return Path(cache_dir) / f"divisors_ell{ell}.txt"


def save_table(table: EnumTable, cache_dir: Path | None = None) -> Path | None:
    filepath = table_filepath(table.ell, cache_dir)
    tmp = None
    try:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"# braidwo-divisors version={FORMAT_VERSION} ell={table.ell} count={len(table)}"]
        lines.extend(f"{i + 1}\t{b}" for i, b in enumerate(table))
        fd, tmp = tempfile.mkstemp(dir=filepath.parent, prefix=filepath.name, suffix=".tmp")
        with os.fdopen(fd, "w") as f:
            f.write("\n".join(lines) + "\n")
        os.replace(tmp, filepath)
    except OSError as exc:
        logger.warning("Could not write divisor cache %s: %s", filepath, exc)
        if tmp is not None:
            Path(tmp).unlink(missing_ok=True)
        return None
    logger.info("Cached Div(Delta^%d) with %d entries at %s", table.ell, len(table), filepath)
    return filepath


def load_table(ell: int, cache_dir: Path | None = None) -> EnumTable | None:
    filepath = table_filepath(ell, cache_dir)
    if not filepath.exists():
        return None

    lines = filepath.read_text().splitlines()
    try:
        header = dict(tok.split("=") for tok in lines[0].split()[2:])
        if int(header["version"]) != FORMAT_VERSION or int(header["ell"]) != ell:
            logger.warning("Ignoring stale divisor cache %s", filepath)
            return None
        count = int(header["count"])

        entries = []
        for expected_rank, line in enumerate(lines[1:], start=1):
            rank, text = line.split("\t")
            if int(rank) != expected_rank:
                logger.warning("Corrupt divisor cache %s at rank %s", filepath, rank)
                return None
            entries.append(parse_expseq(text))
    except (IndexError, ValueError, KeyError) as exc:
        logger.warning("Ignoring unreadable divisor cache %s: %s", filepath, exc)
        return None

    if len(entries) != count:
        logger.warning("Truncated divisor cache %s", filepath)
        return None
    logger.debug("Loaded Div(Delta^%d) from %s", ell, filepath)
    return EnumTable(ell, entries)
