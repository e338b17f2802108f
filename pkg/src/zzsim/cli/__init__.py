"""
cli: Front-end de línea de comandos dirigido por configuración JSON.
"""
