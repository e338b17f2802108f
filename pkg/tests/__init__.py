# tests/__init__.py
"""
Suite de pruebas de zzsim.

No contiene lógica; solo marca el paquete tests.
"""
