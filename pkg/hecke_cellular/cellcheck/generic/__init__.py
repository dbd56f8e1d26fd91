from hecke_cellular.cellcheck.generic.base_checker import BaseChecker
