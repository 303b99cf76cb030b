#!/usr/bin/env python3
"""
Structured Logging for the GCX toolkit
Provides JSON log records, a performance channel and an execution-timing decorator
"""

import json
import logging
import os
import sys
import time
import traceback
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Any, Dict, List, Optional

import psutil


class StructuredFormatter(logging.Formatter):
    """Custom formatter for structured JSON logging"""

    def format(self, record):
        log_entry = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }

        if hasattr(record, 'extra_fields'):
            log_entry.update(record.extra_fields)

        if record.exc_info:
            log_entry["exception"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": traceback.format_exception(*record.exc_info)
            }

        return json.dumps(log_entry, default=str,
                          indent=2 if os.environ.get('LOG_PRETTY', '').lower() == 'true' else None)


class GCXLogger:
    """Context-aware logger with a separate performance channel"""

    def __init__(self, name: str = "gcx", level: int = logging.WARNING, log_file: Optional[str] = None):
        self.name = name
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)
            handler.close()

        # stdout is reserved for command results
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(StructuredFormatter())
        console_handler.setLevel(level)
        self.logger.addHandler(console_handler)

        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(StructuredFormatter())
            file_handler.setLevel(logging.DEBUG)
            self.logger.addHandler(file_handler)

        self.performance_history: List[Dict[str, Any]] = []

    def log_with_context(self, level: str, message: str, **context):
        """Log with additional context fields"""
        extra = {'extra_fields': context}
        log_method = getattr(self.logger, level)
        log_method(message, extra=extra)

    def info(self, message: str, **context):
        self.log_with_context('info', message, **context)

    def debug(self, message: str, **context):
        self.log_with_context('debug', message, **context)

    def warning(self, message: str, **context):
        self.log_with_context('warning', message, **context)

    def error(self, message: str, **context):
        self.log_with_context('error', message, **context)

    def performance(self, operation: str, duration: float, **metrics):
        """Log performance metrics together with the resident set size"""
        try:
            rss = psutil.Process().memory_info().rss
        except psutil.Error:
            rss = None
        entry = {
            'operation': operation,
            'duration_ms': duration * 1000,
            'rss_bytes': rss,
            'metrics': metrics
        }
        self.performance_history.append(entry)
        if len(self.performance_history) > 1000:
            self.performance_history = self.performance_history[-1000:]
        self.logger.debug(f"Performance: {operation}", extra={'extra_fields': entry})


logger = GCXLogger()


def log_execution(level: str = "debug"):
    """Decorator to time a call and report it on the performance channel"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            func_name = f"{func.__module__}.{func.__qualname__}"
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration = time.perf_counter() - start_time
                logger.performance(func_name, duration, success=False, error=type(e).__name__)
                logger.log_with_context(level, f"Function failed: {func_name}",
                                        function=func_name, duration=duration, error=str(e))
                raise
            duration = time.perf_counter() - start_time
            logger.performance(func_name, duration, success=True)
            logger.log_with_context(level, f"Function completed: {func_name}",
                                    function=func_name, duration=duration, success=True)
            return result

        return wrapper
    return decorator


def setup_logging(level: str = "WARNING", pretty: bool = False, log_file: Optional[str] = None):
    """Setup logging configuration"""
    os.environ['LOG_PRETTY'] = str(pretty).lower()

    numeric_level = getattr(logging, level.upper(), logging.WARNING)
    root = logging.getLogger()
    root.setLevel(numeric_level)
    # rebind to the current stderr on every call
    for handler in root.handlers[:]:
        if isinstance(handler.formatter, StructuredFormatter):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(StructuredFormatter())
    root.addHandler(handler)

    global logger
    logger = GCXLogger(level=numeric_level, log_file=log_file)

    logger.debug("Logging initialized", log_level=level, pretty=pretty)
    return logger


__all__ = [
    'logger',
    'log_execution',
    'setup_logging',
    'StructuredFormatter',
    'GCXLogger',
]
