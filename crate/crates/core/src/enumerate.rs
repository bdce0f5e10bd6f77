//! Exhaustive listing of small elementary cells, sheets and movies.

use std::collections::BTreeSet;

use crate::morphism::{MorGen, Slice};
use crate::movie::{Cell, Movie, Sheet};

/// Widest frame the cell passes through.
pub fn cell_max_width(cell: &Cell) -> usize {
    cell.source().max_width().max(cell.target().max_width())
}

/// Every elementary cell whose frames stay within `max_width` strands.
pub fn elementary_cells(max_width: usize) -> Vec<Cell> {
    let mut cells = Vec::new();
    for f in MorGen::ALL {
        for g in MorGen::ALL {
            for gap in 0..=max_width {
                cells.push(Cell::Tensor { f, gap, g });
            }
        }
    }
    for s in slices_up_to(max_width.saturating_sub(1)) {
        cells.push(Cell::BraidZf(s));
        cells.push(Cell::BraidfZ(s));
    }
    for f in MorGen::ALL {
        cells.push(Cell::Unit(f));
    }
    cells.push(Cell::Triangulator);
    cells.push(Cell::Writhe);
    cells.retain(|c| cell_max_width(c) <= max_width);
    cells
}

/// Single slices whose input and output widths are at most `max_width`.
pub fn slices_up_to(max_width: usize) -> Vec<Slice> {
    let mut out = Vec::new();
    for gen in MorGen::ALL {
        let span = gen.source_width().max(gen.target_width());
        if span > max_width {
            continue;
        }
        for left in 0..=max_width - span {
            for right in 0..=max_width - span - left {
                out.push(Slice::new(left, gen, right));
            }
        }
    }
    out
}

/// Every whiskered, possibly flipped, elementary cell within `max_width`.
pub fn single_sheets(max_width: usize) -> Vec<Sheet> {
    let mut out = Vec::new();
    for cell in elementary_cells(max_width) {
        let span = cell_max_width(&cell);
        for left in 0..=max_width - span {
            for right in 0..=max_width - span - left {
                for flipped in [false, true] {
                    out.push(Sheet {
                        left,
                        right,
                        at: 0,
                        cell: cell.clone(),
                        flipped,
                    });
                }
            }
        }
    }
    out
}

/// Movies of 1 to `max_sheets` sheets within `max_width` strands.
///
/// The first sheet fixes the source frame; each later sheet may sit at any
/// slice index of the current frame where its source occurs. Results are
/// distinct and sorted.
pub fn enumerate_movies(max_sheets: usize, max_width: usize) -> Vec<Movie> {
    let sheets = single_sheets(max_width);
    let mut found = BTreeSet::new();
    let mut layer: Vec<Movie> = sheets
        .iter()
        .map(|s| Movie {
            source: s.source(),
            sheets: vec![s.clone()],
        })
        .collect();
    for _ in 1..max_sheets {
        let mut next = Vec::new();
        for movie in &layer {
            let frame = movie.target();
            for s in &sheets {
                for at in 0..=frame.len() {
                    let placed = s.shifted(0, 0, at);
                    if let Ok(after) = placed.apply(&frame) {
                        if after.max_width() > max_width {
                            continue;
                        }
                        let mut m = movie.clone();
                        m.sheets.push(placed);
                        next.push(m);
                    }
                }
            }
        }
        found.extend(layer);
        layer = next;
    }
    found.extend(layer);
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_respect_width() {
        for c in elementary_cells(3) {
            assert!(cell_max_width(&c) <= 3, "{}", c.name());
        }
        assert!(elementary_cells(2).contains(&Cell::Writhe));
        assert!(!elementary_cells(2).contains(&Cell::Triangulator));
        assert!(elementary_cells(3).contains(&Cell::Triangulator));
    }

    #[test]
    fn movies_are_well_formed() {
        for m in enumerate_movies(2, 2) {
            Movie::new(m.source.clone(), m.sheets.clone()).unwrap();
            assert!(m.frames().iter().all(|f| f.max_width() <= 2));
        }
    }
}
