"""Core: command dispatch."""

from .controller import CommandController, CommandResult, RunConfig, render

__all__ = ["CommandController", "CommandResult", "RunConfig", "render"]
