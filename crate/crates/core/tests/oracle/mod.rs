//! Independent reference computations for the closed forms under test.
#![allow(dead_code)]

/// Dormand-Prince 5(4) integration of a scalar ODE `y' = f(x, y)` from
/// `(x0, y0)` to `x1`, with per-step relative error control.
pub fn rk45<F: Fn(f64, f64) -> f64>(f: F, x0: f64, y0: f64, x1: f64, rtol: f64) -> f64 {
    const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 7] = [
        [0.0; 6],
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    const B5: [f64; 7] = [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
        0.0,
    ];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let span = x1 - x0;
    let dir = span.signum();
    let mut x = x0;
    let mut y = y0;
    let mut h = span / 1000.0;
    let mut steps = 0;
    while (x1 - x) * dir > 0.0 {
        steps += 1;
        assert!(steps < 10_000_000, "rk45 did not finish");
        if (x + h - x1) * dir > 0.0 {
            h = x1 - x;
        }
        let mut k = [0.0; 7];
        for i in 0..7 {
            let yi = y + h * (0..i).map(|j| A[i][j] * k[j]).sum::<f64>();
            k[i] = f(x + C[i] * h, yi);
        }
        let y5 = y + h * (0..7).map(|i| B5[i] * k[i]).sum::<f64>();
        let y4 = y + h * (0..7).map(|i| B4[i] * k[i]).sum::<f64>();
        let scale = rtol * y.abs().max(y5.abs()).max(f64::MIN_POSITIVE);
        let err = (y5 - y4).abs() / scale;
        if err <= 1.0 || h.abs() < 1e-14 * span.abs() {
            x += h;
            y = y5;
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
    }
    y
}

/// Center temperature of a sphere from `dT/dr = -r H / (3 k0 T^beta)`,
/// integrated inward from `T(R) = t1 > 0`.
pub fn sphere_center_ode(radius: f64, heating: f64, k0: f64, beta: f64, t1: f64) -> f64 {
    sphere_ode_at(radius, heating, k0, beta, t1, 0.0)
}

pub fn sphere_ode_at(radius: f64, heating: f64, k0: f64, beta: f64, t1: f64, r: f64) -> f64 {
    rk45(
        |r, t| -r * heating / (3.0 * k0 * t.powf(beta)),
        radius,
        t1,
        r,
        1e-11,
    )
}

/// Far-end temperature of a rod from `dT/dz = ((L - z) H + q) / (k0 T^beta)`,
/// integrated from the sink `T(0) = t_near > 0`.
pub fn rod_far_ode(length: f64, heating: f64, q_abs: f64, k0: f64, beta: f64, t_near: f64) -> f64 {
    rk45(
        |z, t| ((length - z) * heating + q_abs) / (k0 * t.powf(beta)),
        0.0,
        t_near,
        length,
        1e-11,
    )
}

/// Surface balance solved by plain bisection in cgs-style units: fluxes in
/// W/cm^2, pressure in mbar, temperatures in K.
/// `5.67e-12 eps (T^4 - T2^4) + 0.02 a P (T - T2) = flux`.
pub fn surface_bisection(
    flux_w_cm2: f64,
    emissivity: f64,
    accommodation: f64,
    p_mbar: f64,
    t2: f64,
) -> f64 {
    let g = |t: f64| {
        5.67e-12 * emissivity * (t.powi(4) - t2.powi(4)) + 0.02 * accommodation * p_mbar * (t - t2)
            - flux_w_cm2
    };
    let mut lo = t2;
    let mut hi = t2 + 1.0;
    while g(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Radial reduction by composite Simpson on a fine uniform grid:
/// `8/(3 sqrt(pi)) Int_0^w_max w^4 exp(-w^2) lambda(omega(w / r_c)) dw`.
pub fn lambda_eff_simpson<S: Fn(f64) -> f64, D: Fn(f64) -> f64>(
    spectrum: S,
    omega: D,
    r_c: f64,
    w_max: f64,
) -> f64 {
    let n = 200_000;
    let h = w_max / n as f64;
    let g = |w: f64| w.powi(4) * (-w * w).exp() * spectrum(omega(w / r_c));
    let mut sum = g(0.0) + g(w_max);
    for i in 1..n {
        sum += g(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    8.0 / (3.0 * std::f64::consts::PI.sqrt()) * sum * h / 3.0
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}
