from . import codes, cover, fission, schemes

# registration order = order in --help
COMMAND_MODULES = [codes, schemes, cover, fission]
