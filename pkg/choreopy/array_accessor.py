import numpy as np
import xarray as xr


class ReportAccessorBase(object):
    """Common logic for check report datasets, which hold one entry per run
    along a single run dimension.

    http://xarray.pydata.org/en/stable/internals.html#extending-xarray
    """

    dim = "Seed"

    def __init__(self, xarray_obj):
        self._obj = xarray_obj

    def runs(self, mask=None):
        """Labels of the runs, optionally only those where ``mask`` holds

        Parameters
        ----------
        mask : str or array_like, optional
            Name of a boolean variable of the dataset, or a boolean array
            along the run dimension.

        Returns
        -------
        runs : numpy.ndarray
        """

        labels = self._obj[self.dim].values
        if mask is None:
            return labels
        if isinstance(mask, str):
            mask = self._obj[mask].values
        return labels[np.asarray(mask, dtype=bool)]

    def add_runs(self, other):
        """Concatenates another report along the run dimension, dropping
        runs already present

        Parameters
        ----------
        other : xarray.Dataset
            Report with the same variables.

        Returns
        -------
        out : xarray.Dataset
        """

        report = self._obj

        labels = other[self.dim].values
        new = labels[~np.isin(labels, report[self.dim].values)]

        # Check for duplicates within the new report
        indexes = np.unique(new, return_index=True)[1]
        new = [new[index] for index in sorted(indexes)]

        if not new:
            return report

        out = xr.concat([report, other.sel({self.dim: new})], dim=self.dim)

        return out

    def group_sum(self, coordinate, new_name=None):
        """Sums quantities over runs of equal group labels and, optionally,
        renames the groups label coordinate.

        Parameters
        ----------
        coordinate : string
            Coordinate name to group runs and sum over
        new_name : string, optional
            New name for the collapsed coordinate

        Returns
        -------
        report : xarray.Dataset, xarray.DataArray
            Xarray object with new coordinate base.
        """

        report = self._obj

        grouped = report.groupby(coordinate).sum()

        if new_name is not None:
            grouped = grouped.rename({coordinate: new_name})

        return grouped
