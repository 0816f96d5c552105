"""Mathematics and IO modules used by the commands, one module per concern."""
