package evt;

public class AsyncBus implements Bus {
    public void post() {
    }

    public void flushNow() {
    }
}
