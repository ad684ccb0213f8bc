import json
import logging
import os
import uuid
from contextvars import ContextVar
from datetime import datetime, timezone
from typing import Any

_run_context: ContextVar[dict[str, str] | None] = ContextVar("qce_run_context", default=None)


def bind_run_context(command: str, run_id: str | None = None) -> str:
    """Tag subsequent log records with the running command and a run id."""

    run_id = run_id or uuid.uuid4().hex[:12]
    _run_context.set({"run_id": run_id, "command": command})
    return run_id


def clear_run_context() -> None:
    _run_context.set(None)


class RunContextFilter(logging.Filter):
    """Attach run context information to log records when available."""

    def filter(self, record: logging.LogRecord) -> bool:
        context = _run_context.get()
        if context:
            record.run_id = context.get("run_id")
            record.command = context.get("command")
        else:
            record.run_id = None
            record.command = None

        return True


class JsonFormatter(logging.Formatter):
    """Lightweight JSON log formatter to keep dependencies minimal."""

    standard_attrs = {
        "name",
        "msg",
        "args",
        "levelname",
        "levelno",
        "pathname",
        "filename",
        "module",
        "exc_info",
        "exc_text",
        "stack_info",
        "lineno",
        "funcName",
        "created",
        "msecs",
        "relativeCreated",
        "thread",
        "threadName",
        "processName",
        "process",
        "taskName",
    }

    def format(self, record: logging.LogRecord) -> str:
        log_object: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }

        for key, value in record.__dict__.items():
            if key in self.standard_attrs or key.startswith("_"):
                continue

            if value is not None:
                log_object[key] = value

        if record.exc_info:
            log_object["exc_info"] = self.formatException(record.exc_info)

        if record.stack_info:
            log_object["stack_info"] = self.formatStack(record.stack_info)

        return json.dumps(log_object, ensure_ascii=False, default=str)


def setup_logging(level: str | None = None, use_json: bool | None = None) -> None:
    """Configure root logging with run context enrichment."""

    log_level_name = (level or os.environ.get("LOG_LEVEL", "INFO")).upper()
    log_level = getattr(logging, log_level_name, logging.INFO)

    if use_json is None:
        from config import Config

        use_json = Config.LOG_JSON

    formatter: logging.Formatter = JsonFormatter() if use_json else logging.Formatter(
        "[%(asctime)s] %(levelname)s in %(module)s: %(message)s"
    )

    handler = logging.StreamHandler()
    handler.setFormatter(formatter)
    handler.setLevel(log_level)
    handler.addFilter(RunContextFilter())

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(log_level)
    root_logger.addHandler(handler)

    logging.captureWarnings(True)
