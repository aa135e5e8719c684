import dotenv

from . import settings

dotenv.load_dotenv()
dotenv.load_dotenv(settings.SETTINGS_ENV_FILE)

try:
    from .app import CmApp
except ImportError as ex:
    raise ImportError(
        "Cannot run cm command line, "
        "chronomatch needs to be installed with cli extras, "
        "pip install chronomatch[cli]"
    ) from ex

main = CmApp()
