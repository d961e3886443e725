import sys

from app.core.config import settings


def progress(tag: str, *parts) -> None:
    """Tagged progress line on stderr; stdout carries only CSV."""
    if settings.LOG_PROGRESS:
        print(f"[{tag}]", *parts, file=sys.stderr, flush=True)
