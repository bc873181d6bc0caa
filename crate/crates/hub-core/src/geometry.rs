//! Coordinate types, great-circle distance, and the spherical Earth model.
//!
//! Longitude is signed east-positive throughout (U.S. longitudes are
//! negative), matching the convention of the census data files. Formatting
//! helpers for the west-positive display convention live on
//! [`GeoCoordinate`].

use crate::error::{Error, Result};

/// Mean Earth radius in miles. All mile-denominated outputs default to this
/// sphere; pass an explicit [`EarthModel`] to override.
pub const MEAN_EARTH_RADIUS_MILES: f64 = 3958.7613;

/// A point in R^n, n >= 1, finite coordinates only.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanPoint {
    coords: Vec<f64>,
}

impl EuclideanPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint("dimension must be >= 1".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("coordinates must be finite".into()));
        }
        Ok(Self { coords })
    }

    /// 2-D convenience constructor. Panics on non-finite input.
    pub fn xy(x: f64, y: f64) -> Self {
        Self::new(vec![x, y]).expect("finite 2-D point")
    }

    /// 1-D convenience constructor. Panics on non-finite input.
    pub fn scalar(x: f64) -> Self {
        Self::new(vec![x]).expect("finite 1-D point")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn distance(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<usize> for EuclideanPoint {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// Latitude/longitude in degrees on a spherical Earth.
///
/// Latitude is restricted to [-90, 90]; longitude is normalized into
/// (-180, 180], east-positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoCoordinate {
    lat_deg: f64,
    lon_deg: f64,
}

impl GeoCoordinate {
    pub fn new(lat_deg: f64, lon_deg: f64) -> Result<Self> {
        if !lat_deg.is_finite() || !(-90.0..=90.0).contains(&lat_deg) {
            return Err(Error::InvalidCoordinate(format!(
                "latitude {lat_deg} outside [-90, 90]"
            )));
        }
        if !lon_deg.is_finite() {
            return Err(Error::InvalidCoordinate(format!(
                "longitude {lon_deg} is not finite"
            )));
        }
        Ok(Self {
            lat_deg,
            lon_deg: normalize_lon(lon_deg),
        })
    }

    pub fn lat_deg(&self) -> f64 {
        self.lat_deg
    }

    /// Signed east-positive longitude.
    pub fn lon_deg(&self) -> f64 {
        self.lon_deg
    }

    /// Longitude under the west-positive display convention (87 meaning
    /// 87 degrees west). Used for human-readable output only.
    pub fn lon_deg_west(&self) -> f64 {
        -self.lon_deg
    }
}

fn normalize_lon(lon: f64) -> f64 {
    let mut l = lon % 360.0;
    if l <= -180.0 {
        l += 360.0;
    } else if l > 180.0 {
        l -= 360.0;
    }
    l
}

/// Spherical Earth model; only the radius matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EarthModel {
    radius_miles: f64,
}

impl EarthModel {
    pub fn new(radius_miles: f64) -> Result<Self> {
        if !radius_miles.is_finite() || radius_miles <= 0.0 {
            return Err(Error::InvalidCoordinate(format!(
                "Earth radius {radius_miles} must be positive"
            )));
        }
        Ok(Self { radius_miles })
    }

    pub fn radius_miles(&self) -> f64 {
        self.radius_miles
    }
}

impl Default for EarthModel {
    fn default() -> Self {
        Self {
            radius_miles: MEAN_EARTH_RADIUS_MILES,
        }
    }
}

pub(crate) fn unit3(g: GeoCoordinate) -> [f64; 3] {
    let lat = g.lat_deg.to_radians();
    let lon = g.lon_deg.to_radians();
    let (slat, clat) = lat.sin_cos();
    let (slon, clon) = lon.sin_cos();
    [clat * clon, clat * slon, slat]
}

/// Central angle between two unit vectors, in [0, pi]. The atan2 form is
/// stable for both nearly-coincident and nearly-antipodal inputs, where a
/// plain arccos of the dot product loses precision.
pub(crate) fn central_angle(u: [f64; 3], v: [f64; 3]) -> f64 {
    let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let cx = u[1] * v[2] - u[2] * v[1];
    let cy = u[2] * v[0] - u[0] * v[2];
    let cz = u[0] * v[1] - u[1] * v[0];
    let cross = (cx * cx + cy * cy + cz * cz).sqrt();
    cross.atan2(dot)
}

pub(crate) fn geo_from_unit3(u: [f64; 3]) -> GeoCoordinate {
    let lat = u[2].atan2((u[0] * u[0] + u[1] * u[1]).sqrt()).to_degrees();
    let lon = u[1].atan2(u[0]).to_degrees();
    GeoCoordinate {
        lat_deg: lat.clamp(-90.0, 90.0),
        lon_deg: normalize_lon(lon),
    }
}

/// Great-circle distance in miles: radius times central angle.
pub fn great_circle_distance(a: GeoCoordinate, b: GeoCoordinate, m: EarthModel) -> f64 {
    m.radius_miles * central_angle(unit3(a), unit3(b))
}

/// Unit vector (cos lat cos lon, cos lat sin lon, sin lat) as a 3-D point.
pub fn to_unit_vector(g: GeoCoordinate) -> EuclideanPoint {
    let u = unit3(g);
    EuclideanPoint::new(vec![u[0], u[1], u[2]]).expect("unit vector is finite")
}

/// Midpoint of the minor great-circle arc between `a` and `b`, computed by
/// normalizing the sum of the two unit vectors.
///
/// Antipodal inputs have no unique midpoint and yield an error.
pub fn geodesic_midpoint(a: GeoCoordinate, b: GeoCoordinate) -> Result<GeoCoordinate> {
    let u = unit3(a);
    let v = unit3(b);
    let s = [u[0] + v[0], u[1] + v[1], u[2] + v[2]];
    let n = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
    if n < 1e-12 {
        return Err(Error::AntipodalMidpoint);
    }
    Ok(geo_from_unit3([s[0] / n, s[1] / n, s[2] / n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const R: f64 = MEAN_EARTH_RADIUS_MILES;

    #[test]
    fn distance_identity_is_zero() {
        let p = GeoCoordinate::new(35.0, -90.0).unwrap();
        assert_eq!(great_circle_distance(p, p, EarthModel::default()), 0.0);
    }

    #[test]
    fn distance_antipodal_is_half_circumference() {
        let a = GeoCoordinate::new(0.0, 0.0).unwrap();
        let b = GeoCoordinate::new(0.0, 180.0).unwrap();
        let d = great_circle_distance(a, b, EarthModel::default());
        assert_relative_eq!(d, std::f64::consts::PI * R, max_relative = 1e-12);
    }

    #[test]
    fn distance_two_person_midpoint_gap() {
        // Mean center of the two-person example vs. the geodesic midpoint.
        let mean = GeoCoordinate::new(35.0, -100.0).unwrap();
        let mid = GeoCoordinate::new(36.68, -100.0).unwrap();
        let d = great_circle_distance(mean, mid, EarthModel::default());
        assert!((d - 116.0).abs() <= 3.0, "got {d}");
    }

    #[test]
    fn midpoint_same_latitude_pair() {
        let a = GeoCoordinate::new(35.0, -120.0).unwrap();
        let b = GeoCoordinate::new(35.0, -80.0).unwrap();
        let mid = geodesic_midpoint(a, b).unwrap();
        assert!((mid.lat_deg() - 36.7).abs() <= 0.05, "lat {}", mid.lat_deg());
        assert!((mid.lon_deg() - -100.0).abs() <= 0.05, "lon {}", mid.lon_deg());
    }

    #[test]
    fn midpoint_identity() {
        let a = GeoCoordinate::new(12.5, 33.25).unwrap();
        let mid = geodesic_midpoint(a, a).unwrap();
        assert_relative_eq!(mid.lat_deg(), a.lat_deg(), epsilon = 1e-12);
        assert_relative_eq!(mid.lon_deg(), a.lon_deg(), epsilon = 1e-12);
    }

    #[test]
    fn midpoint_symmetric_about_equator() {
        let a = GeoCoordinate::new(10.0, 0.0).unwrap();
        let b = GeoCoordinate::new(-10.0, 0.0).unwrap();
        let mid = geodesic_midpoint(a, b).unwrap();
        assert_relative_eq!(mid.lat_deg(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(mid.lon_deg(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn midpoint_antipodal_errors() {
        let a = GeoCoordinate::new(0.0, 0.0).unwrap();
        let b = GeoCoordinate::new(0.0, 180.0).unwrap();
        assert!(matches!(
            geodesic_midpoint(a, b),
            Err(Error::AntipodalMidpoint)
        ));
    }

    #[test]
    fn unit_vector_closed_forms() {
        let u = to_unit_vector(GeoCoordinate::new(0.0, 0.0).unwrap());
        assert_relative_eq!(u[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(u[1], 0.0, epsilon = 1e-15);
        assert_relative_eq!(u[2], 0.0, epsilon = 1e-15);

        let pole = to_unit_vector(GeoCoordinate::new(90.0, 45.0).unwrap());
        assert_relative_eq!(pole[2], 1.0, epsilon = 1e-15);
        assert!(pole[0].abs() < 1e-15 && pole[1].abs() < 1e-15);

        let q = to_unit_vector(GeoCoordinate::new(45.0, 90.0).unwrap());
        let half_sqrt2 = std::f64::consts::SQRT_2 / 2.0;
        assert_relative_eq!(q[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(q[1], half_sqrt2, epsilon = 1e-15);
        assert_relative_eq!(q[2], half_sqrt2, epsilon = 1e-15);
    }

    #[test]
    fn longitude_normalization() {
        assert_eq!(GeoCoordinate::new(0.0, 190.0).unwrap().lon_deg(), -170.0);
        assert_eq!(GeoCoordinate::new(0.0, -190.0).unwrap().lon_deg(), 170.0);
        assert_eq!(GeoCoordinate::new(0.0, -180.0).unwrap().lon_deg(), 180.0);
        assert_eq!(GeoCoordinate::new(0.0, 180.0).unwrap().lon_deg(), 180.0);
    }

    #[test]
    fn latitude_out_of_range_rejected() {
        assert!(GeoCoordinate::new(90.5, 0.0).is_err());
        assert!(GeoCoordinate::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn point_validation() {
        assert!(EuclideanPoint::new(vec![]).is_err());
        assert!(EuclideanPoint::new(vec![1.0, f64::INFINITY]).is_err());
        assert_eq!(EuclideanPoint::xy(3.0, 4.0).distance(&EuclideanPoint::xy(0.0, 0.0)), 5.0);
    }
}
