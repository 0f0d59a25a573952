from hypothesis import settings

settings.register_profile("frobound", deadline=None, max_examples=80)
settings.load_profile("frobound")
