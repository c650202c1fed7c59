import logging

logger = logging.getLogger('ehrlich')


def log_event(message: str, tool_name: str = 'solver', level: int = logging.INFO):
    """Log a solver/tool event.

    Routed the same way everywhere:
    - through Flask's logger when an application context is active
    - through the package logger otherwise
    """
    line = f"[{tool_name}] {message}"
    try:
        from flask import current_app
        current_app.logger.log(level, line)
        return
    except Exception:
        # No Flask app context
        pass
    logger.log(level, line)
