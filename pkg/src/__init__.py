"""
Urysohn lab: Katetov extensions, Roelcke semigroups and finite flows
"""
