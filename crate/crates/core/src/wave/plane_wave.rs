use std::fmt;

use crate::algebra::{builtin, Element};
use crate::analysis::analyze_oscillation_generator;
use crate::error::{domain, Result};

/// Series tolerance used whenever a wave is evaluated.
pub const EVAL_TOL: f64 = 1e-12;

/// The two wave families over the oblique bicomplex basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveTag {
    /// `exp(i(px - Et))`
    C,
    /// `k exp(j(px - Et))`
    J,
}

impl fmt::Display for WaveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WaveTag::C => "phiC",
            WaveTag::J => "phiJ",
        })
    }
}

/// Symbolic plane wave `amplitude * exp(generator * (p x - E t))`
/// in natural units.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    amplitude: Element,
    generator: Element,
    p: f64,
    energy: f64,
}

impl PlaneWave {
    pub fn new(amplitude: Element, generator: Element, p: f64, energy: f64) -> Result<Self> {
        if !amplitude.same_algebra(&generator) {
            return Err(domain("amplitude and generator live in different algebras"));
        }
        if !p.is_finite() || !energy.is_finite() {
            return Err(domain("wavenumber and energy must be finite"));
        }
        analyze_oscillation_generator(&generator)?;
        Ok(Self {
            amplitude,
            generator,
            p,
            energy,
        })
    }

    pub fn from_tag(tag: WaveTag, p: f64, energy: f64) -> Self {
        match tag {
            WaveTag::C => make_phi_c(p, energy),
            WaveTag::J => make_phi_j(p, energy),
        }
    }

    pub fn amplitude(&self) -> &Element {
        &self.amplitude
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Same generator, wavenumber and energy with a new amplitude.
    pub fn with_amplitude(&self, amplitude: Element) -> Self {
        Self {
            amplitude,
            ..self.clone()
        }
    }

    pub fn phase(&self, x: f64, t: f64) -> f64 {
        self.p * x - self.energy * t
    }

    pub fn eval(&self, x: f64, t: f64) -> Result<Element> {
        let arg = self.generator.scale(self.phase(x, t));
        Ok(&self.amplitude * &arg.exp_scaled(EVAL_TOL)?)
    }
}

fn oblique(text: &str) -> Element {
    let spec = builtin("bicomplex_oblique").expect("builtin");
    Element::parse(&spec, text).expect("valid literal")
}

/// `exp(i(px - Et))` over the oblique bicomplex basis.
pub fn make_phi_c(p: f64, energy: f64) -> PlaneWave {
    PlaneWave::new(oblique("1"), oblique("i"), p, energy).expect("i generates oscillations")
}

/// `k exp(j(px - Et))` over the oblique bicomplex basis.
pub fn make_phi_j(p: f64, energy: f64) -> PlaneWave {
    PlaneWave::new(oblique("k"), oblique("j"), p, energy).expect("j generates oscillations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn phi_c_values() {
        let w = make_phi_c(1.0, 0.5);
        assert_eq!(w.eval(0.0, 0.0).unwrap(), oblique("1"));
        assert!(w
            .eval(FRAC_PI_2, 0.0)
            .unwrap()
            .approx_eq(&oblique("i"), 1e-9));
        assert!(w.eval(PI, 0.0).unwrap().approx_eq(&oblique("-1"), 1e-9));
        // phase pi reached through time instead
        assert!(w
            .eval(0.0, -2.0 * PI)
            .unwrap()
            .approx_eq(&oblique("-1"), 1e-9));
    }

    #[test]
    fn phi_j_is_k_times_phi_c() {
        let c = make_phi_c(1.3, 0.7);
        let j = make_phi_j(1.3, 0.7);
        let k = oblique("k");
        assert_eq!(j.eval(0.0, 0.0).unwrap(), k);
        for n in 0..50 {
            let (x, t) = (0.37 * n as f64 - 4.0, 0.11 * n as f64);
            let jv = j.eval(x, t).unwrap();
            assert!((&k * &c.eval(x, t).unwrap()).approx_eq(&jv, 1e-9));
            // k is the internal identity of the ideal
            assert!((&k * &jv).approx_eq(&jv, 1e-12));
            // amplitude swap: k exp(i theta) = k exp(j theta)
            let swapped = PlaneWave::new(k.clone(), oblique("i"), 1.3, 0.7).unwrap();
            assert!(swapped.eval(x, t).unwrap().approx_eq(&jv, 1e-9));
        }
    }

    #[test]
    fn rejects_non_oscillating_generators() {
        let d = builtin("dual").unwrap();
        let omega = Element::parse(&d, "Omega").unwrap();
        assert!(PlaneWave::new(Element::one(&d), omega, 1.0, 1.0).is_err());
        assert!(PlaneWave::new(oblique("1"), oblique("i"), f64::NAN, 1.0).is_err());
    }
}
