"""
zzsim: Simulador de interacción ZZ parásita entre dos qubits superconductores.

Cada qubit se modela como un oscilador anarmónico truncado (anharmonicidad con
signo: negativa para un transmon, positiva para un qubit de flujo C-shunt).

Este paquete contiene:
- model: bases desnudas, operadores y Hamiltoniano (acoplo directo o vía resonador)
- spectrum: diagonalización etiquetada y ZZ (numérico, analítico, perturbativo)
- pulse: trayectoria de frecuencia flat-top del qubit a
- dynamics: propagador dependiente del tiempo y marco lógico
- gates: unitarias objetivo, fidelidad, Z virtuales y ángulos (θ, φ)
- optimize: calibración de overshoot / hold y barridos de asimetría
- io: carga estricta de configuración JSON
- api: tareas de alto nivel y ejecución batch
- cli: interfaz de línea de comandos
"""

__version__ = "0.1.0"
