from hypothesis import settings

# Numeric properties occasionally trip the default deadline on cold numpy
# caches; example counts stay per-test.
settings.register_profile("numeric", deadline=None)
settings.load_profile("numeric")
