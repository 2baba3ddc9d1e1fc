from __future__ import annotations

import logging


def log_event(logger: logging.Logger, event: str, *, level: int = logging.INFO, **fields: object) -> None:
    """Structured log helper.

    Fields should be primitives so handlers can serialize the `wcgen` extra as JSON.
    """

    payload = {"event": event, **fields}
    logger.log(level, event, extra={"wcgen": payload})
