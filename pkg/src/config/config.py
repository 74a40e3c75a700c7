"""
Configuration Module
Central location for all configuration constants and settings
"""
import logging
import os

logger = logging.getLogger(__name__)


class Config:
    """Application configuration constants"""

    # ==================== CAPACITY GUARDS ====================

    # Vertex-count limits; every guard refuses with a CapacityError
    SEARCH_MAX_VERTICES = 32           # subdivided-clique search
    ORACLE_MAX_VERTICES = 12           # brute-force reference implementations
    ENUMERATION_MAX_SIZE = 12          # enumerate_class / univ_axioms / approximant caps
    GAME_MAX_VERTICES = 60             # EF games on arbitrary graphs
    FOREST_GAME_MAX_VERTICES = 6000    # EF games on forests (orbit-reduced solver)
    GAME_MAX_ROUNDS = 6
    PATH_BOUND_MAX = 12                # longest cycle excluded by univ_axioms
    CHAIN_MAX_STEPS = 500

    # Environment variable overriding the guards above
    CAPACITY_ENV_VAR = 'GFL_CAPACITY'

    # Short names accepted in GFL_CAPACITY=name=value,...
    CAPACITY_NAMES = {
        'search': 'SEARCH_MAX_VERTICES',
        'oracle': 'ORACLE_MAX_VERTICES',
        'enumeration': 'ENUMERATION_MAX_SIZE',
        'game': 'GAME_MAX_VERTICES',
        'forest_game': 'FOREST_GAME_MAX_VERTICES',
        'rounds': 'GAME_MAX_ROUNDS',
        'path': 'PATH_BOUND_MAX',
        'steps': 'CHAIN_MAX_STEPS',
    }

    # A bare integer in GFL_CAPACITY replaces these (vertex-size guards only)
    VERTEX_GUARDS = (
        'SEARCH_MAX_VERTICES',
        'ORACLE_MAX_VERTICES',
        'ENUMERATION_MAX_SIZE',
        'GAME_MAX_VERTICES',
        'FOREST_GAME_MAX_VERTICES',
    )

    # ==================== DECISION PROCEDURE ====================

    DECIDE_MAX_RANK = 2        # guaranteed
    DECIDE_OPT_IN_RANK = 3     # best effort, may hit capacity errors

    # ==================== GAMES ====================

    # False: k full rounds are played after the initial pair (a, b).
    # True: the initial pair consumes round 1.
    DISTANCE_GAME_START_IS_ROUND = False

    # Per-graph memo of BFS distance maps; oldest sources are dropped first
    DISTANCE_CACHE_SIZE = 256

    # ==================== ALGEBRAIC CLOSURE ORACLES ====================

    ACL_SAMPLE_SIZE = 24
    ACL_SAMPLE_SEED = 0

    # ==================== OUTPUT ====================

    JSON_INDENT = 2
    INFINITY_TOKEN = 'inf'

    # ==================== LOGGING ====================

    # Log levels: DEBUG, INFO, WARNING, ERROR, CRITICAL
    # Set via environment variable: LOG_LEVEL=ERROR or LOG_LEVEL=DEBUG
    LOG_LEVEL = 'WARNING'
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_DIR = 'logs'

    # ==================== HELPER METHODS ====================

    @staticmethod
    def _capacity_overrides():
        """
        Parse GFL_CAPACITY into a {constant_name: int} mapping

        Returns:
            dict: overrides; empty when the variable is unset or malformed
        """
        raw = os.environ.get(Config.CAPACITY_ENV_VAR, '').strip()
        if not raw:
            return {}

        if raw.isdigit():
            return {name: int(raw) for name in Config.VERTEX_GUARDS}

        overrides = {}
        for item in raw.split(','):
            key, sep, value = item.partition('=')
            key = key.strip().lower()
            value = value.strip()
            if not sep or key not in Config.CAPACITY_NAMES or not value.isdigit():
                logger.warning(f"Ignoring malformed {Config.CAPACITY_ENV_VAR} entry: {item!r}")
                continue
            overrides[Config.CAPACITY_NAMES[key]] = int(value)
        return overrides

    @staticmethod
    def capacity(name):
        """
        Current value of a capacity guard, honouring GFL_CAPACITY

        Args:
            name: constant name, e.g. 'SEARCH_MAX_VERTICES'

        Returns:
            int: the effective limit
        """
        if not hasattr(Config, name):
            raise KeyError(f"Unknown capacity guard: {name}")
        return Config._capacity_overrides().get(name, getattr(Config, name))

    @staticmethod
    def approximant_radius(k):
        """Radius r = (3^k - 1) / 2 used for k-round games"""
        return (3 ** k - 1) // 2

    @staticmethod
    def approximant_size_cap(k):
        """Default tree size cap 2r + 2 for approximants"""
        return 2 * Config.approximant_radius(k) + 2

    @staticmethod
    def approximant_value_cap(k):
        """Count cap s of the (r, s)-values matched by approximants"""
        return max(1, k - 1)


# Convenience exports
SEARCH_MAX_VERTICES = Config.SEARCH_MAX_VERTICES
GAME_MAX_VERTICES = Config.GAME_MAX_VERTICES
DECIDE_MAX_RANK = Config.DECIDE_MAX_RANK
