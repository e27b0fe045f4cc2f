package ui;

public class Theme {
    public int pad;

    public void apply() {
    }

    public boolean dark = false;
}
