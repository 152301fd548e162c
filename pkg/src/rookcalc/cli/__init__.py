from .commands import COMMANDS, cmd_bell, cmd_oracle, cmd_table, cmd_verify
from .parser import CliConfig, build_parser, parse_args
