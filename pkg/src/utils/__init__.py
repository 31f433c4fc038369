from .setup_logger import setup_logger
