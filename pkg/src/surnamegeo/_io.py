import os
import tempfile
from contextlib import contextmanager


@contextmanager
def atomic_write(path):
    """Open ``path`` for text writing; the file only appears if the block succeeds.

    Data goes to a temporary sibling which is renamed over ``path`` on exit,
    so readers never observe a partial file.
    """
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def iter_tsv(path, ncols):
    """Yield ``(lineno, fields)`` for each non-blank line of a TSV file.

    Raises ``FormatError`` when a line does not have exactly ``ncols`` fields.
    """
    from .errors import FormatError

    with open(path, encoding="utf-8", newline="\n") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != ncols:
                raise FormatError(
                    f"{path}: expected {ncols} tab-separated fields, got {len(fields)}",
                    lineno,
                )
            yield lineno, fields
