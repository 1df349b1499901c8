# CLI subcommand handlers: cmd_x(args, logger) -> CommandOutput
from src.commands.common import CommandOutput, check_t_range, check_u_range, emit_report, emit_table
from src.commands.figures import cmd_figures
from src.commands.geodesic import GEODESIC_MODES, cmd_geodesic
from src.commands.loxodrome import cmd_loxodrome
from src.commands.surface import cmd_surface
from src.commands.verify import cmd_verify

__all__ = [
    "CommandOutput",
    "check_t_range",
    "check_u_range",
    "emit_report",
    "emit_table",
    "cmd_figures",
    "GEODESIC_MODES",
    "cmd_geodesic",
    "cmd_loxodrome",
    "cmd_surface",
    "cmd_verify",
]
