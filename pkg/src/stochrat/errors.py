"""Exceptions shared across the package."""


class CapacityError(Exception):
    """An exact computation would exceed a configured size cap.

    Raised instead of silently degrading to an approximation.  The message
    always names the cap that was hit, so callers (and the command line
    front end) can report which knob to turn.
    """
