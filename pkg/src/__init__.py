"""gcx source package - weighted 2-complexes and generalized Coxeter groups"""
