import re

# Indecomposable sampling
SAMPLE_RETRIES = 64
SAMPLE_RANGE = (-9, 9)

DEFAULT_SEED = 0
DEFAULT_MAX_ORBITS = 100000
DEFAULT_SAMPLES = 100
# Field used by verify-tables unless --field is given
DEFAULT_PRIME = 10007

# Version of the canonical order of the rank function family
ENUMERATION_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_DISAGREE = 3

FIELD_RE = re.compile(r'^(?:Q|GF:(\d+))$')
FRACTION_RE = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')
