from .parser import build_command, build_parser

__all__ = ['build_parser', 'build_command']
