package logx;

public class Logger {
    public void record(String m) {
    }

    public void warn(String m) {
        record(m);
    }
}
