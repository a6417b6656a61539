DEGREE = 3
LATTICE_POINTS = tuple((i, j) for i in range(DEGREE + 1) for j in range(DEGREE + 1))

SMOOTH_TRIANGLES = 18
SMOOTH_VERTICES = 18
# genus 4: bounded edges = vertices + 3; with the legs they number the 33 edges of the triangulation
SMOOTH_BOUNDED_EDGES = 21
LEGS_PER_DIRECTION = DEGREE

AXIS_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1))

# random curves: A_ij = -K (i^2 + ij + j^2) + noise
NOISE_RANGE = (-50, 50)
BASE_CURVATURE = 40
SAMPLING_ATTEMPTS = 200
