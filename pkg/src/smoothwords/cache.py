"""Advisory disk cache for enumerated smooth words.

One file per (alphabet, length) holding newline-separated canonical word
texts, plus a manifest recording the tool version.  Deleting the directory
is always safe; a cold run recomputes identical contents.  Writes go through
a temp file and an atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .core import Alphabet, EPSILON, Word, word_from_text

MANIFEST_NAME = "manifest.json"
FORMAT_VERSION = 1


def _canonical(w: Word) -> str:
    # Cache files always use the comma form, the canonical one.
    return ",".join(map(str, w))


class EnumerationCache:
    """File-backed store of smooth-word enumerations, keyed by alphabet and length."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def _path(self, ab: Alphabet, n: int) -> Path:
        return self.directory / f"smooth-{ab.a}-{ab.b}-len{n:04d}.txt"

    def load_range(self, ab: Alphabet, n: int) -> list[list[Word]] | None:
        """Words by length 0..n, or None unless every length is present."""
        by_len: list[list[Word]] = [[EPSILON]]
        for length in range(1, n + 1):
            path = self._path(ab, length)
            if not path.is_file():
                return None
            words = [word_from_text(line) for line in
                     path.read_text().splitlines() if line]
            by_len.append(words)
        return by_len

    def store_range(self, ab: Alphabet, by_len: list[list[Word]]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        self._write_manifest()
        for length in range(1, len(by_len)):
            payload = "\n".join(_canonical(w) for w in by_len[length]) + "\n"
            self._atomic_write(self._path(ab, length), payload)

    def _write_manifest(self) -> None:
        path = self.directory / MANIFEST_NAME
        if path.is_file():
            return
        from . import __version__
        manifest = {"tool": "smoothwords", "version": __version__,
                    "format": FORMAT_VERSION}
        self._atomic_write(path, json.dumps(manifest, indent=2) + "\n")

    def _atomic_write(self, path: Path, payload: str) -> None:
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=path.name + ".")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
