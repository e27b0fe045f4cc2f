package c5;

import java.util.Date;

public class Report {
    public void emit() {
    }
}
