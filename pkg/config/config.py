import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Base configuration."""
    # Application settings
    APP_NAME = "netprune"
    DEBUG = False
    TESTING = False

    # Experiment defaults
    DEFAULT_NREP = int(os.getenv("NETPRUNE_NREP", "100"))
    DEFAULT_SEED = int(os.getenv("NETPRUNE_SEED", "0"))
    DEFAULT_TOREM_MAX = float(os.getenv("NETPRUNE_TOREM_MAX", "0.10"))
    DEFAULT_STEPS = int(os.getenv("NETPRUNE_STEPS", "10"))
    DEFAULT_WORKERS = int(os.getenv("NETPRUNE_WORKERS", "1"))
    DEFAULT_METRICS = ("dA", "dL", "dNL", "dRootED", "simDC")

    # Input settings
    DEFAULT_DELIMITER = os.getenv("NETPRUNE_DELIMITER", ",")
    DATA_DIR = os.getenv("NETPRUNE_DATA_DIR")

    # Logging settings
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    DEBUG = True
    DEFAULT_NREP = 5
    LOG_LEVEL = "WARNING"


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False
    LOG_LEVEL = "ERROR"


# Configuration dictionary
config_by_name = {
    "development": DevelopmentConfig,
    "testing": TestingConfig,
    "production": ProductionConfig
}


# Get current configuration
def get_config():
    env = os.getenv("NETPRUNE_ENV", "development")
    return config_by_name[env]
