# Generic Forest Lab
