
# THIS FILE IS GENERATED FROM DUPY SETUP.PY
#
short_version = '0.1.0'
version = '0.1.0'
full_version = '0.1.0.dev0+Unknown'
git_revision = 'Unknown'
