"""
Constants for rookcalc
"""

# Program information
PROGRAM_NAME = "rookcalc"
PROGRAM_VERSION = "0.1.0"

# Environment variables
ENV_LOG_LEVEL = "LOG_LEVEL"
ENV_THREADS = "ROOKCALC_THREADS"
ENV_CONFIG = "ROOKCALC_CONFIG"
DEFAULT_LOG_LEVEL = "WARNING"

# Worker pool for sweeps and partitioned rook sums
DEFAULT_THREADS = 1
MAX_THREADS = 64

# Size caps
RECURRENCE_N_MAX = 20
CROSS_CHECK_N_MAX = 8
BELL_N_MAX = 20
ORACLE_PLACEMENT_CAP = 10 ** 7
ORACLE_ENUMERATION_N_MAX = 10  # brute-force set partitions / permutations

# Placements handed to one worker when a rook sum is split up
ROOK_SUM_CHUNK = 2048

# Memo bounds: recurrence tables kept per process, q-analog cache entries
TABLE_CACHE_SIZE = 512
QANALOG_CACHE_SIZE = 4096

# Exit codes
EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_CROSS_CHECK = 2
EXIT_INVALID = 3
EXIT_SIZE_CAP = 4

# Rules for pre-weight increments
RULE_SAME_ROW = "same-row"
RULE_BOTTOM_SHIFT = "bottom-shift"

# Output formats
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_PRETTY = "pretty"
DEFAULT_FORMAT = FORMAT_PRETTY

# Table kinds
TABLE_KIND_S = "s"
TABLE_KIND_CD = "cd"
TABLE_KIND_TYPE2 = "type2"

# Board spec strings: word=<UV-string>;pre=<uniform int | j,b=v;...>
BOARD_SPEC_WORD_KEY = "word"
BOARD_SPEC_PRE_KEY = "pre"
BOARD_DEFAULT_PREWEIGHT = 1

# Range syntax for sweep bounds: lo..hi
RANGE_SEPARATOR = ".."

# Multisplit sweeps: lists of at most this many parts, entries at most this size
MULTISPLIT_MAX_PARTS = 3
MULTISPLIT_MAX_ENTRY = 3

# Name of the sweep preset used when nothing else is requested
DEFAULT_PRESET = "desk"
