from hypothesis import settings

settings.register_profile("exact", max_examples=25, deadline=None)
settings.load_profile("exact")
