use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shadowsum_core::evaluators::{vertical_dims, wlo_abelian, wlo_vertical};
use shadowsum_core::geometry::{crossing_marks, face_complex, gleams_dpfree, winding_s1, Arrangement};
use shadowsum_core::io::Input;
use shadowsum_core::linking::{link_number, self_link};
use shadowsum_core::shadow::{
    check_bijection, enumerate_pairs, shadow_from_dpfree, state_sum_with_count, wlo_dpfree_final,
    wlo_dpfree_pairsum,
};
use shadowsum_core::{Error, FramingSource, Level, Link, Shadow};

use crate::output::{pair, RunResult};
use crate::{CliError, Mode, What};

type Result<T> = std::result::Result<T, CliError>;

fn link_of(input: Input, level: Option<u32>) -> Result<Link> {
    let link = match input {
        Input::Link(l) => l,
        Input::Shadow(_) => return Err(CliError::precondition("this command needs a link file, got a shadow")),
    };
    Ok(match level {
        Some(k) => link.with_level(k)?,
        None => link,
    })
}

fn level_for_shadow(level: Option<u32>) -> Result<Level> {
    let k = level.ok_or_else(|| CliError::usage("shadow files carry no level; pass --level"))?;
    Ok(Level::new(k)?)
}

fn winds(link: &Link) -> Vec<i64> {
    link.loops().iter().map(winding_s1).collect()
}

fn mark_table(link: &Link) -> Result<Vec<Vec<i8>>> {
    let marks = crossing_marks(link)?;
    Ok((0..link.loops().len())
        .map(|j| marks.iter().filter(|m| m.loop_index == j).map(|m| m.sign).collect())
        .collect())
}

pub fn eval(input: Input, level: Option<u32>, r: &mut RunResult) -> Result<()> {
    let (shadow, lv) = match input {
        Input::Shadow(s) => (s, level_for_shadow(level)?),
        Input::Link(l) => {
            let link = link_of(Input::Link(l), level)?;
            let fc = face_complex(&link)?;
            (shadow_from_dpfree(&link, &fc, &gleams_dpfree(&link, &fc))?, link.level())
        }
    };
    let s = state_sum_with_count(&shadow, &lv)?;
    r.set_value(s.value);
    r.diag("level", lv.k());
    shadow_counts(&shadow, r);
    r.diag("admissible_colorings", s.admissible_colorings);
    Ok(())
}

fn shadow_counts(shadow: &Shadow, r: &mut RunResult) {
    r.diag("faces", shadow.num_faces());
    r.diag("edges", shadow.edges().len());
    r.diag("vertices", shadow.vertices().len());
    r.diag("euler_characteristic", shadow.total_euler_characteristic());
}

pub struct WloArgs {
    pub mode: Mode,
    pub level: Option<u32>,
    pub genus: u32,
    pub dims: Vec<u32>,
    pub framing: FramingSource,
}

pub fn wlo(input: Option<Input>, a: &WloArgs, r: &mut RunResult) -> Result<()> {
    match a.mode {
        Mode::Vertical => wlo_vertical_cmd(input, a, r),
        Mode::Dpfree => {
            let link = link_of(need(input)?, a.level)?;
            let lv = link.level();
            let fc = face_complex(&link)?;
            let fin = wlo_dpfree_final(&link, &lv, &fc, a.genus)?;
            let pairs = enumerate_pairs(&link, &lv, &fc)?;
            let ps = wlo_dpfree_pairsum(&link, &lv, &fc)?;
            let shadow = shadow_from_dpfree(&link, &fc, &gleams_dpfree(&link, &fc))?;
            let count = state_sum_with_count(&shadow, &lv)?.admissible_colorings;
            let w = winds(&link);
            r.set_value(fin);
            r.diag("level", lv.k());
            r.diag("faces", fc.num_faces());
            r.diag("admissible_pairs", pairs.len());
            r.diag("admissible_colorings", count);
            r.diag("pair_sum", pair(ps));
            r.diag("difference", (fin - ps).norm());
            r.diag("loop_parity", (w.len() as i64 + w.iter().sum::<i64>()).rem_euclid(2));
            r.diag("winds", w);
            r.diag("marks", mark_table(&link)?);
            Ok(())
        }
        Mode::Abelian => {
            let link = link_of(need(input)?, a.level)?;
            let k = link.k();
            let v = wlo_abelian(&link, 1.0 / k as f64, a.framing)?;
            r.set_value(v);
            r.diag("level", k);
            let w = winds(&link);
            if w.iter().all(|&x| x == 0) {
                r.diag("linking", linking_table(&link, link.t0())?);
                r.diag("framings", framings(&link, a.framing)?);
            }
            r.diag("winds", w);
            r.diag("marks", mark_table(&link)?);
            Ok(())
        }
    }
}

fn need(input: Option<Input>) -> Result<Input> {
    input.ok_or_else(|| CliError::usage("this mode needs an input file"))
}

fn wlo_vertical_cmd(input: Option<Input>, a: &WloArgs, r: &mut RunResult) -> Result<()> {
    let (k, dims) = match input {
        Some(i) => {
            if !a.dims.is_empty() {
                return Err(CliError::usage("--dims and an input file are exclusive"));
            }
            let link = link_of(i, a.level)?;
            (link.k(), vertical_dims(&link)?)
        }
        None => {
            let k = a.level.ok_or_else(|| CliError::usage("vertical mode without a file needs --level"))?;
            (k, a.dims.clone())
        }
    };
    r.set_value(wlo_vertical(k, a.genus, &dims)?.into());
    r.diag("level", k);
    r.diag("genus", a.genus);
    r.diag("dims", dims);
    Ok(())
}

/// `Link(l_j, l_k)` for all ordered pairs, with `null` on the diagonal.
fn linking_table(link: &Link, t0: f64) -> Result<Vec<Vec<Option<i64>>>> {
    let ls = link.loops();
    let mut out = Vec::with_capacity(ls.len());
    for (j, a) in ls.iter().enumerate() {
        let mut row = Vec::with_capacity(ls.len());
        for (k, b) in ls.iter().enumerate() {
            row.push(if j == k { None } else { Some(link_number(a, b, t0)?) });
        }
        out.push(row);
    }
    Ok(out)
}

fn framings(link: &Link, src: FramingSource) -> Result<Vec<i64>> {
    link.loops()
        .iter()
        .map(|l| match src {
            FramingSource::Geometric => self_link(l, link.t0()).map_err(CliError::from),
            FramingSource::Declared => Ok(l.framing()),
        })
        .collect()
}

pub struct CheckArgs {
    pub what: What,
    pub level: Option<u32>,
    pub genus: u32,
    pub samples: usize,
    pub seed: u64,
}

pub fn check(input: Input, a: &CheckArgs, r: &mut RunResult) -> Result<()> {
    let ok = match a.what {
        What::Euler => euler(input, a, r)?,
        What::Bijection => {
            let link = link_of(input, a.level)?;
            let rep = check_bijection(&link, &link.level())?;
            r.diag("level", link.k());
            r.diag("admissible_pairs", rep.pairs);
            r.diag("admissible_colorings", rep.colorings);
            r.diag("injective", rep.injective);
            r.diag("surjective", rep.surjective);
            if !rep.witnesses.is_empty() {
                r.diag("witnesses", &rep.witnesses);
            }
            rep.is_bijective()
        }
        What::Lem2 => lem2(input, a, r)?,
    };
    r.status = Some(if ok { "pass" } else { "fail" }.to_string());
    Ok(())
}

fn euler(input: Input, a: &CheckArgs, r: &mut RunResult) -> Result<bool> {
    let expected = 2 - 2 * a.genus as i64;
    let (v, e, chi) = match input {
        Input::Shadow(s) => {
            // every vertex is 4-valent and edges do not record endpoints
            let v = s.vertices().len() as i64;
            (v, 2 * v, s.total_euler_characteristic())
        }
        Input::Link(l) => {
            let arr = Arrangement::build(&l)?;
            (arr.vertices.len() as i64, arr.num_arcs() as i64, arr.total_euler_characteristic())
        }
    };
    r.diag("vertices", v);
    r.diag("arcs", e);
    r.diag("euler_characteristic", chi);
    r.diag("expected", expected);
    Ok(v - e + chi == expected)
}

fn lem2(input: Input, a: &CheckArgs, r: &mut RunResult) -> Result<bool> {
    let link = link_of(input, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut t0s = vec![link.t0()];
    t0s.extend((0..a.samples).map(|_| rng.random_range(0.0..TAU)));
    let mut tables = Vec::with_capacity(t0s.len());
    for &t0 in &t0s {
        let mut table = linking_table(&link, t0)?;
        for (j, l) in link.loops().iter().enumerate() {
            table[j][j] = Some(self_link(l, t0)?);
        }
        tables.push(table);
    }
    let ok = tables.iter().all(|t| *t == tables[0]);
    r.diag("t0", &t0s);
    if ok {
        r.diag("linking", &tables[0]);
    } else {
        r.diag("linking", &tables);
    }
    Ok(ok)
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::core(e)
    }
}
