from pydantic_settings import BaseSettings
from functools import lru_cache
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

class Settings(BaseSettings):
    # Logging Configuration
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")
    log_format: str = os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # Sketch Configuration
    default_chart: str = os.getenv("DEFAULT_CHART", "Z")

    # Self-check Corpus Configuration
    check_seed: int = int(os.getenv("CHECK_SEED", "2008"))
    check_count: int = int(os.getenv("CHECK_COUNT", "200"))
    check_max_abs: int = int(os.getenv("CHECK_MAX_ABS", "10"))
    check_max_denominator: int = int(os.getenv("CHECK_MAX_DENOMINATOR", "4"))
    check_degenerate_per_tag: int = int(os.getenv("CHECK_DEGENERATE_PER_TAG", "10"))

    # Rendering Configuration
    svg_scale: float = float(os.getenv("SVG_SCALE", "40"))
    svg_thin_stroke: float = float(os.getenv("SVG_THIN_STROKE", "1.5"))
    svg_thick_stroke: float = float(os.getenv("SVG_THICK_STROKE", "4.5"))
    ascii_width: int = int(os.getenv("ASCII_WIDTH", "61"))
    ascii_height: int = int(os.getenv("ASCII_HEIGHT", "31"))

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "allow"  # Allow extra fields

@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.
    """
    return Settings()

# Create a global settings instance
settings = get_settings()
