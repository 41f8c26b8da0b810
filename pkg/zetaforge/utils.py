import logging
import os

from fsspec.utils import setup_logging as setup_logger

from zetaforge.errors import InvalidInput


logger = logging.getLogger("zetaforge")


def setup_logging(level=None):

    setup_logger(logger=logger, level=(level or os.environ["ZETAFORGE_LOGGING_LEVEL"]))


if "ZETAFORGE_LOGGING_LEVEL" in os.environ:
    setup_logging()


# extra series terms beyond conductors and genus
DEFAULT_EXTRA_TERMS = 10


def env_truncation():
    """Truncation order from ``ZETAFORGE_TRUNC``, or None when unset."""
    raw = os.environ.get("ZETAFORGE_TRUNC")
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput("ZETAFORGE_TRUNC must be an integer, got %r" % raw)
    if value < 1:
        raise InvalidInput("ZETAFORGE_TRUNC must be positive, got %r" % raw)
    return value


def default_truncation(conductors, genus=0, extra=DEFAULT_EXTRA_TERMS):
    """
    Series length used when none is requested.

    ``max(2 c_i) + 2 g + extra``, unless ``ZETAFORGE_TRUNC`` overrides it.

    Parameters
    ----------
    conductors : iterable of int
        Conductors of the singular points involved.
    genus : int
        Arithmetic genus of the curve (0 for local questions).
    """
    override = env_truncation()
    if override is not None:
        logger.debug("Truncation %s taken from ZETAFORGE_TRUNC", override)
        return override
    return max((2 * c for c in conductors), default=0) + 2 * genus + extra

