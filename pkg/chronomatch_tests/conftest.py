import os

import dotenv
from hypothesis import settings

dotenv.load_dotenv()

settings.register_profile("default", deadline=None)
settings.register_profile("ci", deadline=None, derandomize=True, print_blob=True)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
