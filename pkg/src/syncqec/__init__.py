"""syncqec: construction and verification toolkit for synchronizable hybrid
subsystem quantum codes built from nested classical cyclic code pairs."""

from __future__ import annotations

__version__ = "0.1.0"
