"""
utils: Utilidades transversales: logging estructurado, tablas y exportación.
"""
