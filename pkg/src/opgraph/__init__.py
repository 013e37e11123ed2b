"""Turn controlled-language operation descriptions into labeled process graphs."""

__version__ = "0.1.0"
