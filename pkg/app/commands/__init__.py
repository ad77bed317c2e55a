"""
Command modules, one per subcommand group
"""
